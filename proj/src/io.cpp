#include "jumpform/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "jumpform/errors.hpp"

namespace jumpform {

namespace {

const Int kJsonIntLimit = Int(1) << 53;

bool is_decimal_string(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Json json_from_int(const Int& x) {
    if (x > -kJsonIntLimit && x < kJsonIntLimit) return Json(static_cast<std::int64_t>(x));
    return Json(x.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (!is_decimal_string(s))
            throw MalformedInputError("'" + s + "' is not a decimal integer string");
        return Int(s);
    }
    if (j.is_number_float())
        throw MalformedInputError(
            "non-integral JSON number; integers beyond 2^53 must be decimal strings");
    throw MalformedInputError("expected an integer, got " + std::string(j.type_name()));
}

Json json_from_vector(const HomologyClass& v) {
    Json arr = Json::array();
    for (const Int& x : v.coords) arr.push_back(json_from_int(x));
    return arr;
}

HomologyClass vector_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInputError("expected a JSON array of integers");
    std::vector<Int> coords;
    coords.reserve(j.size());
    for (const Json& e : j) coords.push_back(int_from_json(e));
    return HomologyClass(std::move(coords));
}

Json json_from_form(const IntegerForm& form) {
    Json out;
    out["rank"] = form.rank();
    Json gram = Json::array();
    for (std::size_t i = 0; i < form.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < form.rank(); ++j) row.push_back(json_from_int(form.at(i, j)));
        gram.push_back(std::move(row));
    }
    out["gram"] = std::move(gram);
    return out;
}

IntegerForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("gram"))
        throw MalformedInputError("gram document must be {\"rank\": n, \"gram\": [[...]]}");
    const Int rank = int_from_json(j.at("rank"));
    if (rank < 0 || rank > 100000) throw MalformedInputError("unreasonable rank");
    const auto n = static_cast<std::size_t>(rank);
    const Json& gram = j.at("gram");
    if (!gram.is_array() || gram.size() != n)
        throw MalformedInputError("gram array has " + std::to_string(gram.size()) +
                                  " rows, expected " + std::to_string(n));
    std::vector<std::vector<Int>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& r = gram.at(i);
        if (!r.is_array() || r.size() != n)
            throw MalformedInputError("gram row " + std::to_string(i) + " does not have " +
                                      std::to_string(n) + " entries");
        rows[i].reserve(n);
        for (const Json& e : r) rows[i].push_back(int_from_json(e));
    }
    return IntegerForm(rows);
}

IntegerForm parse_form_text(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw MalformedInputError("empty gram document");
    if (text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw MalformedInputError("malformed JSON at byte " + std::to_string(e.byte) + ": " +
                                      e.what());
        }
        return form_from_json(j);
    }
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || !is_decimal_string(tok) || tok[0] == '-')
        throw MalformedInputError("text gram format: expected leading rank");
    const auto n = static_cast<std::size_t>(std::stoull(tok));
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(in >> tok) || !is_decimal_string(tok))
                throw MalformedInputError("text gram format: expected " + std::to_string(n * n) +
                                          " integers after the rank");
            rows[i][j] = Int(tok);
        }
    if (in >> tok) throw MalformedInputError("text gram format: trailing tokens");
    return IntegerForm(rows);
}

std::string rational_to_string(const Rat& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rational_from_string(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_decimal_string(s)) throw MalformedInputError("'" + s + "' is not a rational");
        return Rat(Int(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_decimal_string(num) || !is_decimal_string(den) || den[0] == '-')
        throw MalformedInputError("'" + s + "' is not a rational");
    const Int d(den);
    if (d == 0) throw MalformedInputError("zero denominator in '" + s + "'");
    return Rat(Int(num), d);
}

Json json_from_interval(const RationalInterval& iv) {
    Json out;
    if (iv.empty) {
        out["empty"] = true;
        return out;
    }
    out["lo"] = rational_to_string(iv.lo);
    out["hi"] = rational_to_string(iv.hi);
    return out;
}

Json json_from_geometry(const SurfaceGeometry& d) {
    Json out;
    out["genus"] = json_from_int(d.genus);
    out["c1F"] = json_from_int(d.c1f);
    out["FC"] = json_from_int(d.fc);
    return out;
}

SurfaceGeometry geometry_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("c1F") || !j.contains("FC"))
        throw MalformedInputError(
            "surface geometry must be {\"genus\": g, \"c1F\": int, \"FC\": int}");
    return SurfaceGeometry(int_from_json(j.at("genus")), int_from_json(j.at("c1F")),
                           int_from_json(j.at("FC")));
}

Json json_from_reconstruction_input(const ReconstructionInput& in) {
    Json out;
    Json basis = Json::array();
    for (const SurfaceGeometry& d : in.basis) basis.push_back(json_from_geometry(d));
    out["basis"] = std::move(basis);
    Json pairs = Json::object();
    for (const auto& [key, d] : in.pairs)
        pairs[std::to_string(key.first) + "," + std::to_string(key.second)] = json_from_geometry(d);
    out["pairs"] = std::move(pairs);
    return out;
}

ReconstructionInput reconstruction_input_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis"))
        throw MalformedInputError("reconstruction input must be {\"basis\": [...], \"pairs\": {...}}");
    ReconstructionInput in;
    for (const Json& e : j.at("basis")) in.basis.push_back(geometry_from_json(e));
    if (j.contains("pairs")) {
        for (const auto& [key, val] : j.at("pairs").items()) {
            const std::size_t comma = key.find(',');
            if (comma == std::string::npos)
                throw MalformedInputError("pair key '" + key + "' is not of the form \"i,j\"");
            std::size_t i = 0, jj = 0;
            try {
                i = std::stoull(key.substr(0, comma));
                jj = std::stoull(key.substr(comma + 1));
            } catch (const std::exception&) {
                throw MalformedInputError("pair key '" + key + "' is not of the form \"i,j\"");
            }
            if (i >= jj) throw MalformedInputError("pair key '" + key + "' must have i < j");
            in.pairs[{i, jj}] = geometry_from_json(val);
        }
    }
    return in;
}

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

Json json_from_jump_points(const std::vector<JumpPoint>& points) {
    Json arr = Json::array();
    for (const JumpPoint& p : points) {
        Json e;
        e["chart"] = p.chart;
        e["params"] = Json::array({round12(p.u), round12(p.v)});
        e["location"] = Json::array(
            {round12(p.location[0]), round12(p.location[1]), round12(p.location[2]), round12(p.location[3])});
        e["index"] = p.index;
        e["residual"] = round12(p.residual);
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace jumpform
