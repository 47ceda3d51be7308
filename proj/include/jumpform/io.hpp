#pragma once

#include <string>

#include <json.hpp>

#include "jumpform/adjunction.hpp"
#include "jumpform/bounds.hpp"
#include "jumpform/characteristic.hpp"
#include "jumpform/detector.hpp"
#include "jumpform/lattice.hpp"

namespace jumpform {

// Key order in emitted documents is fixed, so identical inputs always
// serialize to byte-identical text.
using Json = nlohmann::ordered_json;

// Integers are JSON numbers while |x| < 2^53 and decimal strings beyond.
Json json_from_int(const Int& x);
Int int_from_json(const Json& j);

Json json_from_vector(const HomologyClass& v);
HomologyClass vector_from_json(const Json& j);

Json json_from_form(const IntegerForm& form);
IntegerForm form_from_json(const Json& j);

/// Accepts either the JSON object {"rank": n, "gram": [[...]]} or
/// whitespace-separated text: n followed by n^2 integers in row-major order.
IntegerForm parse_form_text(const std::string& text);

std::string rational_to_string(const Rat& r);  // "p/q" lowest terms; "p" when q == 1
Rat rational_from_string(const std::string& s);

Json json_from_interval(const RationalInterval& iv);

Json json_from_geometry(const SurfaceGeometry& d);
SurfaceGeometry geometry_from_json(const Json& j);

Json json_from_reconstruction_input(const ReconstructionInput& in);
ReconstructionInput reconstruction_input_from_json(const Json& j);

/// Snaps a double to 12 significant digits (the CLI contract for detector
/// reals).
double round12(double x);
Json json_from_jump_points(const std::vector<JumpPoint>& points);

std::string read_file(const std::string& path);

}  // namespace jumpform
