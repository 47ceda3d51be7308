#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jumpform/cli.hpp"
#include "jumpform/io.hpp"
#include "jumpform/lattice.hpp"

using namespace jumpform;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "jumpform_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

}  // namespace

TEST_CASE("form subcommands") {
    const std::string e8 = write_scratch("e8.json", json_from_form(e8_form()).dump());
    CliResult r = run({"form", "inertia", "--gram", e8});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"b_plus\":8,\"b_minus\":0,\"b_zero\":0}\n");

    r = run({"form", "det", "--gram", e8});
    CHECK(r.out == "{\"det\":1}\n");

    r = run({"form", "parity", "--gram", e8});
    CHECK(r.out == "{\"parity\":\"even\"}\n");

    r = run({"form", "det", "--gram", write_scratch("big.json",
                                                    "{\"rank\":1,\"gram\":[[\"1152921504606846976\"]]}")});
    CHECK(r.out == "{\"det\":\"1152921504606846976\"}\n");

    // text format and inline JSON both work
    r = run({"form", "inertia", "--gram", write_scratch("h.txt", "2\n0 1\n1 0\n")});
    CHECK(r.out == "{\"b_plus\":1,\"b_minus\":1,\"b_zero\":0}\n");
    r = run({"form", "inertia", "--gram", "{\"rank\":1,\"gram\":[[1]]}"});
    CHECK(r.out == "{\"b_plus\":1,\"b_minus\":0,\"b_zero\":0}\n");

    const std::string h = write_scratch("h.json", json_from_form(hyperbolic_form()).dump());
    r = run({"form", "sum", "--gram", h, "--gram", h});
    CHECK(r.code == 0);
    // round-trip: the emitted document is accepted back
    const std::string hh = write_scratch("hh.json", r.out);
    r = run({"form", "inertia", "--gram", hh});
    CHECK(r.out == "{\"b_plus\":2,\"b_minus\":2,\"b_zero\":0}\n");

    r = run({"form", "sum"});
    CHECK(r.out == "{\"rank\":0,\"gram\":[]}\n");

    r = run({"form", "classify", "--gram", hh});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"parity\":\"even\"") != std::string::npos);
    CHECK(r.out.find("\"description\":\"2 H\"") != std::string::npos);

    r = run({"form", "standard", "--name", "e8"});
    CHECK(r.out == json_from_form(e8_form()).dump() + "\n");
    r = run({"form", "standard", "--name", "diagonal", "--p", "1", "--q", "2"});
    CHECK(r.out == json_from_form(diagonal_form(1, 2)).dump() + "\n");
}

TEST_CASE("char subcommands") {
    const std::string h = write_scratch("h.json", json_from_form(hyperbolic_form()).dump());
    CliResult r = run({"char", "find", "--gram", h});
    CHECK(r.out == "{\"base\":[0,0],\"unimodular\":true,\"kernel_basis\":[]}\n");

    // emitted base is accepted back as --xi
    r = run({"char", "check", "--gram", h, "--xi", "[0,0]"});
    CHECK(r.out == "{\"characteristic\":true}\n");
    r = run({"char", "check", "--gram", "{\"rank\":1,\"gram\":[[1]]}", "--xi", "[2]"});
    CHECK(r.out == "{\"characteristic\":false}\n");

    r = run({"char", "enumerate", "--gram", "{\"rank\":1,\"gram\":[[1]]}", "--box", "1"});
    CHECK(r.out == "{\"count\":2,\"vectors\":[[-1],[1]]}\n");

    r = run({"char", "validate-c1", "--gram", "{\"rank\":1,\"gram\":[[1]]}", "--c1", "[3]"});
    CHECK(r.out == "{\"characteristic\":true,\"wu_identity\":true}\n");

    r = run({"char", "enumerate", "--gram", h, "--box", "9"});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"code\":\"size_limit\"") != std::string::npos);
}

TEST_CASE("adjunction subcommands") {
    CliResult r = run({"adjunction", "jump-count", "--genus", "0", "--ff", "1", "--c1f", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"fc\":0}\n");

    r = run({"adjunction", "genus", "--ff", "0", "--c1f", "0", "--fc", "0"});
    CHECK(r.out == "{\"genus\":1}\n");

    r = run({"adjunction", "self-int", "--genus", "0", "--c1f", "3", "--fc", "0"});
    CHECK(r.out == "{\"ff\":1}\n");

    r = run({"adjunction", "pair", "--f", "{\"genus\":1,\"c1F\":0,\"FC\":0}", "--g",
             "{\"genus\":1,\"c1F\":0,\"FC\":0}", "--fg", "{\"genus\":2,\"c1F\":0,\"FC\":0}"});
    CHECK(r.out == "{\"pairing\":1}\n");

    r = run({"adjunction", "lai-check", "--genus", "0", "--ff", "1", "--c1f", "3", "--count", "0"});
    CHECK(r.out == "{\"holds\":true}\n");

    r = run({"adjunction", "chern-eval", "--gram", "{\"rank\":1,\"gram\":[[1]]}", "--c1", "[3]",
             "--class", "[1]"});
    CHECK(r.out == "{\"value\":3}\n");

    const std::string input = write_scratch(
        "rec.json",
        "{\"basis\":[{\"genus\":1,\"c1F\":0,\"FC\":0},{\"genus\":1,\"c1F\":0,\"FC\":0}],"
        "\"pairs\":{\"0,1\":{\"genus\":2,\"c1F\":0,\"FC\":0}}}");
    r = run({"adjunction", "reconstruct", "--input", input});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"rank\":2,\"gram\":[[0,1],[1,0]],\"unimodular\":true}\n");
    // ... and the emitted gram parses back
    const std::string back = write_scratch("rec_out.json", r.out);
    CHECK(run({"form", "parity", "--gram", back}).out == "{\"parity\":\"even\"}\n");

    const std::string nonuni = write_scratch(
        "rec2.json", "{\"basis\":[{\"genus\":0,\"c1F\":4,\"FC\":0}],\"pairs\":{}}");
    r = run({"adjunction", "reconstruct", "--input", nonuni});
    CHECK(r.out.find("\"unimodular\":false") != std::string::npos);
    CHECK(r.out.find("\"warnings\"") != std::string::npos);

    r = run({"adjunction", "genus", "--ff", "-4", "--c1f", "0", "--fc", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"code\":\"infeasible_geometry\"") != std::string::npos);

    r = run({"adjunction", "jump-count", "--genus", "0", "--ff", "0", "--c1f", "1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"code\":\"parity_error\"") != std::string::npos);
}

TEST_CASE("bounds subcommands") {
    CliResult r = run({"bounds", "jump", "--bplus", "1", "--bminus", "0", "--c1f", "3", "--case",
                       "positive"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"lo\":\"0\",\"hi\":\"0\"}\n");

    r = run({"bounds", "jump", "--bplus", "3", "--bminus", "19", "--c1f", "0", "--case",
             "negative", "--integer-range", "--nonnegative"});
    CHECK(r.out == "{\"lo\":\"-79\",\"hi\":\"-1/9\",\"integers_empty\":true}\n");

    r = run({"bounds", "jump", "--bplus", "0", "--bminus", "5", "--c1f", "0", "--case",
             "positive"});
    CHECK(r.out == "{\"empty\":true}\n");

    r = run({"bounds", "selfint", "--bplus", "3", "--bminus", "19", "--case", "negative"});
    CHECK(r.out == "{\"lo\":\"-160\",\"hi\":\"-20/9\"}\n");

    r = run({"bounds", "check", "--n", "0", "--bplus", "1", "--bminus", "0", "--c1f", "3",
             "--case", "positive"});
    CHECK(r.out == "{\"within\":true}\n");
}

TEST_CASE("detect subcommand") {
    CliResult r = run({"detect", "--surface", "clifford_torus", "--grid", "32"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":0") != std::string::npos);
    const CliResult again = run({"detect", "--surface", "clifford_torus", "--grid", "32"});
    CHECK(r.out == again.out);  // byte-identical stdout

    r = run({"detect", "--surface", "holomorphic_graph", "--degree", "2", "--grid", "32"});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"code\":\"identically_complex\"") != std::string::npos);

    const std::string csv = (scratch_dir() / "field.csv").string();
    r = run({"detect", "--surface", "graph_of_zbar", "--grid", "16", "--dump-field", csv});
    CHECK(r.code == 0);
    std::ifstream f(csv);
    std::string header;
    std::getline(f, header);
    CHECK(header == "chart,u,v,re,im");

    // polynomial surface file: the graph of conj(z)
    const std::string surf = write_scratch(
        "zbar.json",
        "{\"name\":\"zbar\",\"charts\":[{\"domain\":[-1,1,-1,1],"
        "\"components\":[[[1,1,0]],[[1,0,1]],[[1,1,0]],[[-1,0,1]]]}]}");
    r = run({"detect", "--surface", surf, "--grid", "16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":0") != std::string::npos);
}

TEST_CASE("usage and error reporting") {
    CliResult r = run({"no-such-command"});
    CHECK(r.code == 2);

    r = run({"form", "inertia"});
    CHECK(r.code == 2);  // missing required --gram

    r = run({"form", "inertia", "--gram",
             write_scratch("broken.json", "{\"rank\":2,\"gram\":[[0,1],[1,")});
    CHECK(r.code == 1);
    CHECK(r.out.find("byte") != std::string::npos);

    r = run({"form", "inertia", "--gram", (scratch_dir() / "missing.json").string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"code\":\"io_error\"") != std::string::npos);

    r = run({"--help"});
    CHECK(r.code == 0);
}
