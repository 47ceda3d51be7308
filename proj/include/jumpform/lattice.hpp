#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "jumpform/numeric.hpp"

namespace jumpform {

/// Integer coordinate vector of a second-homology class in a fixed basis.
struct HomologyClass {
    std::vector<Int> coords;

    HomologyClass() = default;
    HomologyClass(std::initializer_list<long long> xs) {
        coords.reserve(xs.size());
        for (long long x : xs) coords.emplace_back(x);
    }
    explicit HomologyClass(std::vector<Int> c) : coords(std::move(c)) {}

    static HomologyClass zero(std::size_t n) { return HomologyClass(std::vector<Int>(n)); }

    std::size_t size() const { return coords.size(); }
    Int& operator[](std::size_t i) { return coords[i]; }
    const Int& operator[](std::size_t i) const { return coords[i]; }

    bool operator==(const HomologyClass&) const = default;
};

/// Symmetric integer Gram matrix of a bilinear form on H2.
/// Symmetry and squareness are validated at construction; `set` writes both
/// mirror entries so the invariant cannot be broken through the public surface.
class IntegerForm {
public:
    IntegerForm() = default;
    explicit IntegerForm(const std::vector<std::vector<Int>>& rows);

    static IntegerForm zero(std::size_t rank);

    std::size_t rank() const { return rank_; }
    const Int& at(std::size_t i, std::size_t j) const { return gram_[i * rank_ + j]; }
    void set(std::size_t i, std::size_t j, Int v);

    std::vector<std::vector<Int>> rows() const;

    bool operator==(const IntegerForm&) const = default;

private:
    std::size_t rank_ = 0;
    std::vector<Int> gram_;  // row-major, rank_*rank_
};

struct Inertia {
    std::int64_t b_plus = 0;
    std::int64_t b_minus = 0;
    std::int64_t b_zero = 0;

    std::int64_t signature() const { return b_plus - b_minus; }
    bool operator==(const Inertia&) const = default;
};

enum class Parity { Even, Odd };

Int pairing(const IntegerForm& form, const HomologyClass& x, const HomologyClass& y);
Int self_intersection(const IntegerForm& form, const HomologyClass& x);

/// Exact eigenvalue sign counts via symmetric congruence reduction over the
/// rationals.  When every diagonal pivot of the remaining block vanishes but
/// some off-diagonal entry q_ij is nonzero, the congruence adding row/col j
/// to i creates the pivot 2*q_ij.
Inertia inertia(const IntegerForm& form);

/// Exact determinant, fraction-free (Bareiss) elimination.
Int determinant(const IntegerForm& form);

bool is_unimodular(const IntegerForm& form);
Parity parity(const IntegerForm& form);

IntegerForm direct_sum(const std::vector<IntegerForm>& forms);

// Standard lattices, bit-exact Gram matrices.
IntegerForm diagonal_form(std::size_t plus, std::size_t minus);
IntegerForm hyperbolic_form();
IntegerForm e8_form();
IntegerForm neg_e8_form();

/// Canonical shape of an indefinite unimodular form.
/// Odd forms decompose as diag_plus*<1> + diag_minus*<-1>; even forms as
/// e8_blocks*E8 + h_blocks*H with e8_blocks signed (negative means -E8).
struct CanonicalDecomposition {
    Parity form_parity = Parity::Odd;
    std::int64_t diag_plus = 0;
    std::int64_t diag_minus = 0;
    std::int64_t e8_blocks = 0;
    std::int64_t h_blocks = 0;
    IntegerForm representative;

    std::string description() const;
};

/// Requires the form to be unimodular and indefinite; anything else raises
/// UnsupportedClassificationError rather than guessing.
CanonicalDecomposition classify_indefinite_unimodular(const IntegerForm& form);

}  // namespace jumpform
