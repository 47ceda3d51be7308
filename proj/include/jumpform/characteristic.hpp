#pragma once

#include <vector>

#include "jumpform/lattice.hpp"

namespace jumpform {

/// One characteristic vector plus a description of all others.
/// For a unimodular form the mod-2 solution is unique, so the full solution
/// set is base + 2*Z^n and kernel_basis is empty.  Otherwise kernel_basis
/// spans the homogeneous mod-2 solutions (0/1 lifts).
struct CharacteristicCoset {
    HomologyClass base;
    bool unimodular = false;
    std::vector<HomologyClass> kernel_basis;
};

/// True iff xi.x = x.x (mod 2) for every basis vector x; both sides are
/// linear mod 2, so checking the basis suffices.
bool is_characteristic(const IntegerForm& form, const HomologyClass& xi);

/// Solves Q*xi = diag(Q) (mod 2) by elimination over GF(2) and lifts one
/// solution to integer coordinates in {0,1}.
CharacteristicCoset find_characteristic(const IntegerForm& form);

/// All characteristic vectors with every coordinate in [-max_abs_coord,
/// max_abs_coord], in lexicographic order.  Guarded: rank <= 12 and
/// max_abs_coord <= 5, failing loudly rather than truncating.
std::vector<HomologyClass> enumerate_characteristic(const IntegerForm& form, int max_abs_coord);

struct C1Report {
    bool characteristic = false;
    bool wu_identity = false;  // c1.c1 == 2*chi + 3*sigma
};

/// Advisory compatibility check for a first Chern class candidate on a closed
/// simply connected almost complex four-manifold: c1 must be characteristic
/// and satisfy c1.c1 = 2*chi + 3*sigma with chi = 2 + b+ + b-.
C1Report validate_c1_almost_complex(const IntegerForm& form, const HomologyClass& c1);

}  // namespace jumpform
