#include "jumpform/bounds.hpp"

#include "jumpform/errors.hpp"

namespace jumpform {

RationalInterval RationalInterval::make(Rat lo, Rat hi) {
    RationalInterval iv;
    iv.empty = lo > hi;
    iv.lo = std::move(lo);
    iv.hi = std::move(hi);
    return iv;
}

namespace {

void require_betti(const Int& b_plus, const Int& b_minus) {
    if (b_plus < 0 || b_minus < 0)
        throw MalformedInputError("b+ and b- must be nonnegative");
}

}  // namespace

RationalInterval jump_bounds(const Int& b_plus, const Int& b_minus, const Int& c1f,
                             BoundsCase which) {
    require_betti(b_plus, b_minus);
    Rat lo, hi;
    if (which == BoundsCase::NegativeSelfInt) {
        lo = Rat(b_plus - 9 * b_minus + 10 - c1f) / 2;
        hi = (Rat(b_plus) - Rat(b_minus, 9) - Rat(10, 9) - Rat(c1f)) / 2;
    } else {
        lo = (Rat(b_plus, 9) - Rat(b_minus) + Rat(26, 9) - Rat(c1f)) / 2;
        hi = Rat(9 * b_plus - b_minus - 6 - c1f) / 2;
    }
    return RationalInterval::make(std::move(lo), std::move(hi));
}

IntegerRange integer_feasible(const RationalInterval& interval, bool require_nonnegative) {
    IntegerRange out;
    if (interval.empty) {
        out.empty = true;
        return out;
    }
    out.lo = rat_ceil(interval.lo);
    out.hi = rat_floor(interval.hi);
    if (require_nonnegative && out.lo < 0) out.lo = 0;
    out.empty = out.lo > out.hi;
    return out;
}

bool check_bounds(const Int& n, const Int& b_plus, const Int& b_minus, const Int& c1f,
                  BoundsCase which) {
    return jump_bounds(b_plus, b_minus, c1f, which).contains(Rat(n));
}

RationalInterval char_sphere_selfint_bounds(const Int& b_plus, const Int& b_minus,
                                            BoundsCase which) {
    require_betti(b_plus, b_minus);
    Rat lo, hi;
    if (which == BoundsCase::NegativeSelfInt) {
        lo = Rat(b_plus - 9 * b_minus + 8);
        hi = Rat(b_plus) - Rat(b_minus, 9) - Rat(28, 9);
    } else {
        lo = Rat(b_plus, 9) - Rat(b_minus) + Rat(8, 9);
        hi = Rat(9 * b_plus - b_minus - 8);
    }
    return RationalInterval::make(std::move(lo), std::move(hi));
}

}  // namespace jumpform
