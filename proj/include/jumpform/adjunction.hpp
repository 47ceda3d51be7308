#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "jumpform/lattice.hpp"

namespace jumpform {

/// Geometric data attached to a class: genus of a smooth representative, the
/// evaluation c1.F, and the algebraic count F.C of complex jump points.
/// F.C is a signed intersection count, so negative values are legal.
struct SurfaceGeometry {
    Int genus;
    Int c1f;  // c1 . F
    Int fc;   // F . C

    SurfaceGeometry() = default;
    SurfaceGeometry(Int g, Int c, Int n);
};

/// Solves the adjunction identity 2 - 2g + F.F - c1.F - 2 F.C = 0 for F.C.
Int jump_count(const Int& genus, const Int& ff, const Int& c1f);

/// Same identity solved for the genus; the result must be a nonnegative
/// integer.
Int genus_from(const Int& ff, const Int& c1f, const Int& fc);

/// F.F = 2g - 2 + c1.F + 2 F.C.
Int self_int_from_geometry(const SurfaceGeometry& d);

/// Polarization: F.G from the geometric data of F, G and a smooth
/// representative of F+G.
Int pairing_from_geometry(const SurfaceGeometry& d_f, const SurfaceGeometry& d_g,
                          const SurfaceGeometry& d_fg);

/// Per-class geometry for a basis F_1..F_n plus, for every i<j, geometry of a
/// representative of F_i + F_j.
struct ReconstructionInput {
    std::vector<SurfaceGeometry> basis;
    std::map<std::pair<std::size_t, std::size_t>, SurfaceGeometry> pairs;
};

struct ReconstructionResult {
    IntegerForm form;
    bool unimodular = false;  // advisory only; reconstruction never blocks on it
};

ReconstructionResult reconstruct_gram(const ReconstructionInput& input);

/// i*c1(M) as the integer evaluation <c1, F>.
Int chern_eval(const IntegerForm& form, const HomologyClass& c1, const HomologyClass& f);

/// Dimension-four specialization check: (2 - 2g) + F.F - c1.F == 2*count.
bool lai_dim4_check(const Int& genus, const Int& ff, const Int& c1f, const Int& count);

}  // namespace jumpform
