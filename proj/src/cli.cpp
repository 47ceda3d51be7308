#include "jumpform/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>

#include "jumpform/adjunction.hpp"
#include "jumpform/bounds.hpp"
#include "jumpform/characteristic.hpp"
#include "jumpform/detector.hpp"
#include "jumpform/errors.hpp"
#include "jumpform/io.hpp"
#include "jumpform/lattice.hpp"

namespace jumpform {

namespace {

Int parse_int_flag(const std::string& s, const char* flag) {
    if (s.empty()) throw MalformedInputError(std::string(flag) + ": empty integer");
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw MalformedInputError(std::string(flag) + ": '" + s + "' is not an integer");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw MalformedInputError(std::string(flag) + ": '" + s + "' is not an integer");
    return Int(s);
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedInputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

bool looks_inline(const std::string& s, char open) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == open;
    }
    return false;
}

IntegerForm load_gram(const std::string& arg) {
    if (looks_inline(arg, '{')) return parse_form_text(arg);
    return parse_form_text(read_file(arg));
}

HomologyClass load_vec(const std::string& arg) {
    const std::string text = looks_inline(arg, '[') ? arg : read_file(arg);
    return vector_from_json(parse_json(text));
}

SurfaceGeometry load_geometry(const std::string& arg) {
    const std::string text = looks_inline(arg, '{') ? arg : read_file(arg);
    return geometry_from_json(parse_json(text));
}

BoundsCase parse_case(const std::string& s) {
    return s == "negative" ? BoundsCase::NegativeSelfInt : BoundsCase::PositiveSelfInt;
}

void emit(std::ostream& out, Json payload, const std::vector<std::string>& warnings = {}) {
    if (!warnings.empty()) payload["warnings"] = warnings;
    out << payload.dump() << "\n";
}

// Bivariate polynomial with double coefficients; the file-based surface
// format describes each chart component this way.
struct Poly2 {
    struct Term {
        double c;
        int du, dv;
    };
    std::vector<Term> terms;

    double eval(double u, double v) const {
        double acc = 0;
        for (const Term& t : terms) acc += t.c * std::pow(u, t.du) * std::pow(v, t.dv);
        return acc;
    }
    double d_du(double u, double v) const {
        double acc = 0;
        for (const Term& t : terms)
            if (t.du > 0) acc += t.c * t.du * std::pow(u, t.du - 1) * std::pow(v, t.dv);
        return acc;
    }
    double d_dv(double u, double v) const {
        double acc = 0;
        for (const Term& t : terms)
            if (t.dv > 0) acc += t.c * t.dv * std::pow(u, t.du) * std::pow(v, t.dv - 1);
        return acc;
    }
};

ParamSurface surface_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("charts") || !j.at("charts").is_array() ||
        j.at("charts").empty())
        throw MalformedInputError("surface file must be {\"name\": ..., \"charts\": [...]}");
    ParamSurface surf;
    surf.name = j.value("name", "surface");
    for (const Json& cj : j.at("charts")) {
        Chart ch;
        ch.name = cj.value("name", "chart" + std::to_string(surf.charts.size()));
        const Json& dom = cj.at("domain");
        if (!dom.is_array() || dom.size() != 4)
            throw MalformedInputError("chart domain must be [u_min, u_max, v_min, v_max]");
        ch.u_min = dom.at(0).get<double>();
        ch.u_max = dom.at(1).get<double>();
        ch.v_min = dom.at(2).get<double>();
        ch.v_max = dom.at(3).get<double>();
        if (!(ch.u_min < ch.u_max) || !(ch.v_min < ch.v_max))
            throw MalformedInputError("chart domain is empty");
        if (cj.contains("periodic")) {
            const Json& per = cj.at("periodic");
            if (!per.is_array() || per.size() != 2)
                throw MalformedInputError("chart periodic must be [bool, bool]");
            ch.periodic_u = per.at(0).get<bool>();
            ch.periodic_v = per.at(1).get<bool>();
        }
        const Json& comps = cj.at("components");
        if (!comps.is_array() || comps.size() != 4)
            throw MalformedInputError("chart needs exactly 4 polynomial components");
        auto polys = std::make_shared<std::array<Poly2, 4>>();
        for (std::size_t c = 0; c < 4; ++c) {
            for (const Json& term : comps.at(c)) {
                if (!term.is_array() || term.size() != 3)
                    throw MalformedInputError("polynomial term must be [coeff, deg_u, deg_v]");
                Poly2::Term t{term.at(0).get<double>(), term.at(1).get<int>(), term.at(2).get<int>()};
                if (t.du < 0 || t.dv < 0) throw MalformedInputError("negative degree in polynomial term");
                (*polys)[c].terms.push_back(t);
            }
        }
        ch.map = [polys](double u, double v) {
            return Vec4((*polys)[0].eval(u, v), (*polys)[1].eval(u, v), (*polys)[2].eval(u, v),
                        (*polys)[3].eval(u, v));
        };
        ch.d_du = [polys](double u, double v) {
            return Vec4((*polys)[0].d_du(u, v), (*polys)[1].d_du(u, v), (*polys)[2].d_du(u, v),
                        (*polys)[3].d_du(u, v));
        };
        ch.d_dv = [polys](double u, double v) {
            return Vec4((*polys)[0].d_dv(u, v), (*polys)[1].d_dv(u, v), (*polys)[2].d_dv(u, v),
                        (*polys)[3].d_dv(u, v));
        };
        surf.charts.push_back(std::move(ch));
    }
    return surf;
}

ParamSurface load_surface(const std::string& arg, int degree) {
    if (arg == "clifford_torus") return clifford_torus();
    if (arg == "round_sphere") return round_sphere();
    if (arg == "holomorphic_graph") return holomorphic_graph(degree);
    if (arg == "graph_of_zbar") return graph_of_zbar();
    return surface_from_json(parse_json(read_file(arg)));
}

void dump_field_csv(const std::string& path, const ParamSurface& surf,
                    const AlmostComplexStructure& j, int grid_n) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "chart,u,v,re,im\n";
    char buf[192];
    for (std::size_t c = 0; c < surf.charts.size(); ++c) {
        const Chart& ch = surf.charts[c];
        for (int iu = 0; iu < grid_n; ++iu) {
            const double u = ch.periodic_u ? ch.u_min + iu * (ch.u_max - ch.u_min) / grid_n
                                           : ch.u_min + iu * (ch.u_max - ch.u_min) / (grid_n - 1);
            for (int iv = 0; iv < grid_n; ++iv) {
                const double v = ch.periodic_v ? ch.v_min + iv * (ch.v_max - ch.v_min) / grid_n
                                               : ch.v_min + iv * (ch.v_max - ch.v_min) / (grid_n - 1);
                const Complex d = defect(surf, j, static_cast<int>(c), u, v);
                std::snprintf(buf, sizeof(buf), "%zu,%.12g,%.12g,%.12g,%.12g\n", c, u, v, d.real(),
                              d.imag());
                out << buf;
            }
        }
    }
}

Json inertia_json(const Inertia& in) {
    Json out;
    out["b_plus"] = in.b_plus;
    out["b_minus"] = in.b_minus;
    out["b_zero"] = in.b_zero;
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact intersection-form and complex-jump-point toolkit"};
    app.require_subcommand(1);

    // ---- form ----------------------------------------------------------
    auto* form = app.add_subcommand("form", "symmetric integer bilinear forms");
    form->require_subcommand(1);
    struct {
        std::string gram;
        std::vector<std::string> grams;
        std::string name = "diagonal";
        std::size_t p = 0, q = 0;
    } f_opt;

    auto* f_inertia = form->add_subcommand("inertia", "exact eigenvalue sign counts");
    f_inertia->add_option("--gram", f_opt.gram, "gram file or inline JSON")->required();
    f_inertia->callback([&] { emit(out, inertia_json(inertia(load_gram(f_opt.gram)))); });

    auto* f_det = form->add_subcommand("det", "exact determinant");
    f_det->add_option("--gram", f_opt.gram)->required();
    f_det->callback([&] {
        Json payload;
        payload["det"] = json_from_int(determinant(load_gram(f_opt.gram)));
        emit(out, payload);
    });

    auto* f_parity = form->add_subcommand("parity", "even/odd type");
    f_parity->add_option("--gram", f_opt.gram)->required();
    f_parity->callback([&] {
        Json payload;
        payload["parity"] = parity(load_gram(f_opt.gram)) == Parity::Even ? "even" : "odd";
        emit(out, payload);
    });

    auto* f_classify = form->add_subcommand("classify", "canonical indefinite unimodular shape");
    f_classify->add_option("--gram", f_opt.gram)->required();
    f_classify->callback([&] {
        const IntegerForm q = load_gram(f_opt.gram);
        const CanonicalDecomposition dec = classify_indefinite_unimodular(q);
        const Inertia in = inertia(q);
        Json payload;
        payload["parity"] = dec.form_parity == Parity::Even ? "even" : "odd";
        if (dec.form_parity == Parity::Odd) {
            payload["diag_plus"] = dec.diag_plus;
            payload["diag_minus"] = dec.diag_minus;
        } else {
            payload["e8_blocks"] = dec.e8_blocks;
            payload["h_blocks"] = dec.h_blocks;
        }
        payload["rank"] = q.rank();
        payload["signature"] = in.signature();
        payload["description"] = dec.description();
        payload["representative"] = json_from_form(dec.representative);
        emit(out, payload);
    });

    auto* f_sum = form->add_subcommand("sum", "direct sum of forms");
    f_sum->add_option("--gram", f_opt.grams, "repeatable");
    f_sum->callback([&] {
        std::vector<IntegerForm> parts;
        parts.reserve(f_opt.grams.size());
        for (const std::string& g : f_opt.grams) parts.push_back(load_gram(g));
        emit(out, json_from_form(direct_sum(parts)));
    });

    auto* f_std = form->add_subcommand("standard", "emit a standard lattice gram");
    f_std->add_option("--name", f_opt.name, "diagonal|hyperbolic|e8|neg-e8")
        ->required()
        ->check(CLI::IsMember({"diagonal", "hyperbolic", "e8", "neg-e8"}));
    f_std->add_option("--p", f_opt.p, "positive diagonal entries (diagonal only)");
    f_std->add_option("--q", f_opt.q, "negative diagonal entries (diagonal only)");
    f_std->callback([&] {
        IntegerForm q;
        if (f_opt.name == "diagonal")
            q = diagonal_form(f_opt.p, f_opt.q);
        else if (f_opt.name == "hyperbolic")
            q = hyperbolic_form();
        else if (f_opt.name == "e8")
            q = e8_form();
        else
            q = neg_e8_form();
        emit(out, json_from_form(q));
    });

    // ---- char ----------------------------------------------------------
    auto* chr = app.add_subcommand("char", "characteristic vectors");
    chr->require_subcommand(1);
    struct {
        std::string gram, xi, c1;
        int box = 1;
    } c_opt;

    auto* c_find = chr->add_subcommand("find", "solve for a characteristic vector");
    c_find->add_option("--gram", c_opt.gram)->required();
    c_find->callback([&] {
        const CharacteristicCoset coset = find_characteristic(load_gram(c_opt.gram));
        Json payload;
        payload["base"] = json_from_vector(coset.base);
        payload["unimodular"] = coset.unimodular;
        Json kb = Json::array();
        for (const HomologyClass& k : coset.kernel_basis) kb.push_back(json_from_vector(k));
        payload["kernel_basis"] = std::move(kb);
        emit(out, payload);
    });

    auto* c_check = chr->add_subcommand("check", "test whether a vector is characteristic");
    c_check->add_option("--gram", c_opt.gram)->required();
    c_check->add_option("--xi", c_opt.xi, "vector (inline JSON array or file)")->required();
    c_check->callback([&] {
        Json payload;
        payload["characteristic"] = is_characteristic(load_gram(c_opt.gram), load_vec(c_opt.xi));
        emit(out, payload);
    });

    auto* c_enum = chr->add_subcommand("enumerate", "all characteristic vectors in a box");
    c_enum->add_option("--gram", c_opt.gram)->required();
    c_enum->add_option("--box", c_opt.box, "max |coordinate|")->required();
    c_enum->callback([&] {
        const auto vecs = enumerate_characteristic(load_gram(c_opt.gram), c_opt.box);
        Json payload;
        payload["count"] = vecs.size();
        Json arr = Json::array();
        for (const HomologyClass& v : vecs) arr.push_back(json_from_vector(v));
        payload["vectors"] = std::move(arr);
        emit(out, payload);
    });

    auto* c_val = chr->add_subcommand("validate-c1", "almost-complex compatibility of c1");
    c_val->add_option("--gram", c_opt.gram)->required();
    c_val->add_option("--c1", c_opt.c1)->required();
    c_val->callback([&] {
        const C1Report r = validate_c1_almost_complex(load_gram(c_opt.gram), load_vec(c_opt.c1));
        Json payload;
        payload["characteristic"] = r.characteristic;
        payload["wu_identity"] = r.wu_identity;
        emit(out, payload);
    });

    // ---- adjunction ----------------------------------------------------
    auto* adj = app.add_subcommand("adjunction", "the adjunction identity and polarization");
    adj->require_subcommand(1);
    struct {
        std::string genus, ff, c1f, fc, count;
        std::string f, g, fg, input;
        std::string gram, c1, klass;
    } a_opt;

    auto* a_jc = adj->add_subcommand("jump-count", "solve for F.C");
    a_jc->add_option("--genus", a_opt.genus)->required();
    a_jc->add_option("--ff", a_opt.ff)->required();
    a_jc->add_option("--c1f", a_opt.c1f)->required();
    a_jc->callback([&] {
        Json payload;
        payload["fc"] = json_from_int(jump_count(parse_int_flag(a_opt.genus, "--genus"),
                                                 parse_int_flag(a_opt.ff, "--ff"),
                                                 parse_int_flag(a_opt.c1f, "--c1f")));
        emit(out, payload);
    });

    auto* a_genus = adj->add_subcommand("genus", "solve for the genus");
    a_genus->add_option("--ff", a_opt.ff)->required();
    a_genus->add_option("--c1f", a_opt.c1f)->required();
    a_genus->add_option("--fc", a_opt.fc)->required();
    a_genus->callback([&] {
        Json payload;
        payload["genus"] = json_from_int(genus_from(parse_int_flag(a_opt.ff, "--ff"),
                                                    parse_int_flag(a_opt.c1f, "--c1f"),
                                                    parse_int_flag(a_opt.fc, "--fc")));
        emit(out, payload);
    });

    auto* a_si = adj->add_subcommand("self-int", "solve for F.F");
    a_si->add_option("--genus", a_opt.genus)->required();
    a_si->add_option("--c1f", a_opt.c1f)->required();
    a_si->add_option("--fc", a_opt.fc)->required();
    a_si->callback([&] {
        const SurfaceGeometry d(parse_int_flag(a_opt.genus, "--genus"),
                                parse_int_flag(a_opt.c1f, "--c1f"),
                                parse_int_flag(a_opt.fc, "--fc"));
        Json payload;
        payload["ff"] = json_from_int(self_int_from_geometry(d));
        emit(out, payload);
    });

    auto* a_pair = adj->add_subcommand("pair", "polarized pairing from three records");
    a_pair->add_option("--f", a_opt.f, "geometry (inline JSON or file)")->required();
    a_pair->add_option("--g", a_opt.g)->required();
    a_pair->add_option("--fg", a_opt.fg)->required();
    a_pair->callback([&] {
        Json payload;
        payload["pairing"] = json_from_int(pairing_from_geometry(
            load_geometry(a_opt.f), load_geometry(a_opt.g), load_geometry(a_opt.fg)));
        emit(out, payload);
    });

    auto* a_rec = adj->add_subcommand("reconstruct", "gram matrix from basis + pair geometry");
    a_rec->add_option("--input", a_opt.input, "reconstruction input JSON file")->required();
    a_rec->callback([&] {
        const std::string text =
            looks_inline(a_opt.input, '{') ? a_opt.input : read_file(a_opt.input);
        const ReconstructionResult res =
            reconstruct_gram(reconstruction_input_from_json(parse_json(text)));
        Json payload = json_from_form(res.form);
        payload["unimodular"] = res.unimodular;
        std::vector<std::string> warnings;
        if (!res.unimodular) warnings.push_back("reconstructed form is not unimodular");
        emit(out, payload, warnings);
    });

    auto* a_lai = adj->add_subcommand("lai-check", "verify the dimension-four identity");
    a_lai->add_option("--genus", a_opt.genus)->required();
    a_lai->add_option("--ff", a_opt.ff)->required();
    a_lai->add_option("--c1f", a_opt.c1f)->required();
    a_lai->add_option("--count", a_opt.count)->required();
    a_lai->callback([&] {
        Json payload;
        payload["holds"] = lai_dim4_check(
            parse_int_flag(a_opt.genus, "--genus"), parse_int_flag(a_opt.ff, "--ff"),
            parse_int_flag(a_opt.c1f, "--c1f"), parse_int_flag(a_opt.count, "--count"));
        emit(out, payload);
    });

    auto* a_chern = adj->add_subcommand("chern-eval", "evaluate <c1, F>");
    a_chern->add_option("--gram", a_opt.gram)->required();
    a_chern->add_option("--c1", a_opt.c1)->required();
    a_chern->add_option("--class", a_opt.klass)->required();
    a_chern->callback([&] {
        Json payload;
        payload["value"] = json_from_int(
            chern_eval(load_gram(a_opt.gram), load_vec(a_opt.c1), load_vec(a_opt.klass)));
        emit(out, payload);
    });

    // ---- bounds --------------------------------------------------------
    auto* bnd = app.add_subcommand("bounds", "characteristic-sphere jump-point bounds");
    bnd->require_subcommand(1);
    struct {
        std::string bplus, bminus, c1f, n;
        std::string which = "positive";
        bool integer_range = false;
        bool nonnegative = false;
    } b_opt;

    auto* b_jump = bnd->add_subcommand("jump", "interval for the jump-point count n");
    b_jump->add_option("--bplus", b_opt.bplus)->required();
    b_jump->add_option("--bminus", b_opt.bminus)->required();
    b_jump->add_option("--c1f", b_opt.c1f)->required();
    b_jump->add_option("--case", b_opt.which)->required()->check(CLI::IsMember({"positive", "negative"}));
    b_jump->add_flag("--integer-range", b_opt.integer_range, "also report integer endpoints");
    b_jump->add_flag("--nonnegative", b_opt.nonnegative, "impose n >= 0 on the integer range");
    b_jump->callback([&] {
        const RationalInterval iv = jump_bounds(
            parse_int_flag(b_opt.bplus, "--bplus"), parse_int_flag(b_opt.bminus, "--bminus"),
            parse_int_flag(b_opt.c1f, "--c1f"), parse_case(b_opt.which));
        Json payload = json_from_interval(iv);
        if (b_opt.integer_range) {
            const IntegerRange r = integer_feasible(iv, b_opt.nonnegative);
            if (r.empty) {
                payload["integers_empty"] = true;
            } else {
                payload["n_min"] = json_from_int(r.lo);
                payload["n_max"] = json_from_int(r.hi);
            }
        }
        emit(out, payload);
    });

    auto* b_si = bnd->add_subcommand("selfint", "c1-independent self-intersection interval");
    b_si->add_option("--bplus", b_opt.bplus)->required();
    b_si->add_option("--bminus", b_opt.bminus)->required();
    b_si->add_option("--case", b_opt.which)->required()->check(CLI::IsMember({"positive", "negative"}));
    b_si->callback([&] {
        emit(out, json_from_interval(char_sphere_selfint_bounds(
                      parse_int_flag(b_opt.bplus, "--bplus"),
                      parse_int_flag(b_opt.bminus, "--bminus"), parse_case(b_opt.which))));
    });

    auto* b_check = bnd->add_subcommand("check", "is n inside the interval");
    b_check->add_option("--n", b_opt.n)->required();
    b_check->add_option("--bplus", b_opt.bplus)->required();
    b_check->add_option("--bminus", b_opt.bminus)->required();
    b_check->add_option("--c1f", b_opt.c1f)->required();
    b_check->add_option("--case", b_opt.which)->required()->check(CLI::IsMember({"positive", "negative"}));
    b_check->callback([&] {
        Json payload;
        payload["within"] = check_bounds(
            parse_int_flag(b_opt.n, "--n"), parse_int_flag(b_opt.bplus, "--bplus"),
            parse_int_flag(b_opt.bminus, "--bminus"), parse_int_flag(b_opt.c1f, "--c1f"),
            parse_case(b_opt.which));
        emit(out, payload);
    });

    // ---- detect --------------------------------------------------------
    struct {
        std::string surface;
        int grid = 64;
        double tol = 1e-10;
        int degree = 2;
        int threads = 1;
        std::string dump;
    } d_opt;
    auto* det = app.add_subcommand("detect", "locate complex jump points on a surface");
    det->add_option("--surface", d_opt.surface,
                    "clifford_torus|round_sphere|holomorphic_graph|graph_of_zbar or a JSON file")
        ->required();
    det->add_option("--grid", d_opt.grid, "samples per chart axis (>= 16)");
    det->add_option("--tol", d_opt.tol, "Newton residual tolerance");
    det->add_option("--degree", d_opt.degree, "degree for holomorphic_graph");
    det->add_option("--threads", d_opt.threads, "parallel grid evaluation");
    det->add_option("--dump-field", d_opt.dump, "write chart,u,v,re,im CSV");
    det->callback([&] {
        if (d_opt.grid < 16) throw MalformedInputError("--grid must be at least 16");
        const ParamSurface surf = load_surface(d_opt.surface, d_opt.degree);
        const AlmostComplexStructure j = AlmostComplexStructure::standard();
        if (!d_opt.dump.empty()) dump_field_csv(d_opt.dump, surf, j, d_opt.grid);
        const DetectionReport rep = find_jump_points(surf, j, d_opt.grid, d_opt.tol, d_opt.threads);
        Json payload;
        payload["surface"] = surf.name;
        payload["grid"] = rep.grid_n;
        payload["tol"] = round12(rep.tol);
        payload["points"] = json_from_jump_points(rep.points);
        payload["count"] = rep.points.size();
        payload["total_index"] = rep.total_index;
        payload["dropped_seeds"] = rep.dropped_seeds;
        payload["dropped_points"] = rep.dropped_points;
        payload["zero_fraction"] = round12(rep.zero_fraction);
        emit(out, payload);
    });

    // ---- dispatch ------------------------------------------------------
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("jumpform");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        Json report;
        report["status"] = "error";
        report["code"] = e.code();
        report["message"] = e.what();
        out << report.dump() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        Json report;
        report["status"] = "error";
        report["code"] = "malformed_input";
        report["message"] = e.what();
        out << report.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace jumpform
