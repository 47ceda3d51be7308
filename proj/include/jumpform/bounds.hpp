#pragma once

#include "jumpform/numeric.hpp"

namespace jumpform {

/// Exact rational closed interval.  `empty` is an explicit value, not an
/// error; lo/hi keep the computed endpoints even when lo > hi.
struct RationalInterval {
    Rat lo;
    Rat hi;
    bool empty = false;

    static RationalInterval make(Rat lo, Rat hi);
    bool contains(const Rat& x) const { return !empty && lo <= x && x <= hi; }

    bool operator==(const RationalInterval&) const = default;
};

/// The two hypotheses of the characteristic-sphere bounds.  F.F = 0 is
/// outside them, so the case is always explicit and never inferred.
enum class BoundsCase { NegativeSelfInt, PositiveSelfInt };

/// Bounds on the number n of complex jump points of a characteristic sphere:
///   F.F <= -1:  (b+ - 9b- + 10 - c1F)/2  <=  n  <=  (b+ - b-/9 - 10/9 - c1F)/2
///   F.F >= +1:  (b+/9 - b- + 26/9 - c1F)/2  <=  n  <=  (9b+ - b- - 6 - c1F)/2
RationalInterval jump_bounds(const Int& b_plus, const Int& b_minus, const Int& c1f,
                             BoundsCase which);

struct IntegerRange {
    Int lo;
    Int hi;
    bool empty = false;
};

/// Smallest/largest integers inside the interval, optionally intersected with
/// n >= 0 for the geometric-count reading.
IntegerRange integer_feasible(const RationalInterval& interval, bool require_nonnegative);

bool check_bounds(const Int& n, const Int& b_plus, const Int& b_minus, const Int& c1f,
                  BoundsCase which);

/// The same bounds pushed through F.F = 2n - 2 + c1F at genus zero; the c1F
/// terms cancel, leaving c1F-independent self-intersection bounds:
///   F.F <= -1:  [b+ - 9b- + 8,  b+ - b-/9 - 28/9]
///   F.F >= +1:  [b+/9 - b- + 8/9,  9b+ - b- - 8]
RationalInterval char_sphere_selfint_bounds(const Int& b_plus, const Int& b_minus,
                                            BoundsCase which);

}  // namespace jumpform
