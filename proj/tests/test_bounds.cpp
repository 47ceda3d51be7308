#include <doctest.h>

#include <random>

#include "jumpform/bounds.hpp"
#include "jumpform/errors.hpp"

using namespace jumpform;

namespace {
Rat r(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }
}  // namespace

TEST_CASE("jump_bounds worked values") {
    const auto cp2 = jump_bounds(1, 0, 3, BoundsCase::PositiveSelfInt);
    CHECK_FALSE(cp2.empty);
    CHECK(cp2.lo == r(0));
    CHECK(cp2.hi == r(0));

    const auto collapse = jump_bounds(1, 9, 0, BoundsCase::PositiveSelfInt);
    CHECK(collapse.lo == r(-3));
    CHECK(collapse.hi == r(-3));

    const auto neg = jump_bounds(3, 19, 0, BoundsCase::NegativeSelfInt);
    CHECK(neg.lo == r(-79));
    CHECK(neg.hi == r(-1, 9));

    CHECK_THROWS_AS(jump_bounds(-1, 0, 0, BoundsCase::PositiveSelfInt), MalformedInputError);
}

TEST_CASE("integer_feasible") {
    const auto single = integer_feasible(RationalInterval::make(r(0), r(0)), false);
    CHECK_FALSE(single.empty);
    CHECK(single.lo == 0);
    CHECK(single.hi == 0);

    const auto negative = integer_feasible(RationalInterval::make(r(-79), r(-1, 9)), true);
    CHECK(negative.empty);

    const auto window = integer_feasible(RationalInterval::make(r(1, 2), r(7, 3)), false);
    CHECK_FALSE(window.empty);
    CHECK(window.lo == 1);
    CHECK(window.hi == 2);

    CHECK(integer_feasible(RationalInterval::make(r(1), r(0)), false).empty);
}

TEST_CASE("check_bounds") {
    CHECK(check_bounds(0, 1, 0, 3, BoundsCase::PositiveSelfInt));
    CHECK_FALSE(check_bounds(1, 1, 0, 3, BoundsCase::PositiveSelfInt));
    CHECK(check_bounds(-3, 1, 9, 0, BoundsCase::PositiveSelfInt));
}

TEST_CASE("char_sphere_selfint_bounds worked values") {
    const auto cp2 = char_sphere_selfint_bounds(1, 0, BoundsCase::PositiveSelfInt);
    CHECK(cp2.lo == r(1));
    CHECK(cp2.hi == r(1));

    const auto collapse = char_sphere_selfint_bounds(1, 9, BoundsCase::PositiveSelfInt);
    CHECK(collapse.lo == r(-8));
    CHECK(collapse.hi == r(-8));

    const auto neg = char_sphere_selfint_bounds(3, 19, BoundsCase::NegativeSelfInt);
    CHECK(neg.lo == r(-160));
    CHECK(neg.hi == r(-20, 9));
}

TEST_CASE("self-intersection bounds are the adjunction image of the count bounds") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> bd(0, 40), cd(-30, 30);
    for (BoundsCase which : {BoundsCase::NegativeSelfInt, BoundsCase::PositiveSelfInt}) {
        for (int t = 0; t < 300; ++t) {
            const Int bp = bd(rng), bm = bd(rng), c1f = cd(rng);
            const auto n_iv = jump_bounds(bp, bm, c1f, which);
            const auto ff_iv = char_sphere_selfint_bounds(bp, bm, which);
            CHECK(ff_iv.lo == 2 * n_iv.lo - 2 + Rat(c1f));
            CHECK(ff_iv.hi == 2 * n_iv.hi - 2 + Rat(c1f));
            CHECK(ff_iv.empty == n_iv.empty);
        }
    }
}

TEST_CASE("endpoint slopes in b+ and b- have the advertised signs") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> bd(0, 25), cd(-10, 10);
    for (int t = 0; t < 50; ++t) {
        const Int bp = bd(rng), bm = bd(rng), c1f = cd(rng);
        {
            const auto a = jump_bounds(bp, bm, c1f, BoundsCase::NegativeSelfInt);
            const auto b = jump_bounds(bp + 1, bm, c1f, BoundsCase::NegativeSelfInt);
            CHECK(b.lo - a.lo == r(1, 2));
            CHECK(b.hi - a.hi == r(1, 2));
            const auto c = jump_bounds(bp, bm + 1, c1f, BoundsCase::NegativeSelfInt);
            CHECK(c.lo - a.lo == r(-9, 2));
            CHECK(c.hi - a.hi == r(-1, 18));
        }
        {
            const auto a = jump_bounds(bp, bm, c1f, BoundsCase::PositiveSelfInt);
            const auto b = jump_bounds(bp + 1, bm, c1f, BoundsCase::PositiveSelfInt);
            CHECK(b.lo - a.lo == r(1, 18));
            CHECK(b.hi - a.hi == r(9, 2));
            const auto c = jump_bounds(bp, bm + 1, c1f, BoundsCase::PositiveSelfInt);
            CHECK(c.lo - a.lo == r(-1, 2));
            CHECK(c.hi - a.hi == r(-1, 2));
        }
    }
}

TEST_CASE("raising c1F by two shifts both endpoints down by one") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> bd(0, 25), cd(-10, 10);
    for (BoundsCase which : {BoundsCase::NegativeSelfInt, BoundsCase::PositiveSelfInt}) {
        for (int t = 0; t < 50; ++t) {
            const Int bp = bd(rng), bm = bd(rng), c1f = cd(rng);
            const auto a = jump_bounds(bp, bm, c1f, which);
            const auto b = jump_bounds(bp, bm, c1f + 2, which);
            CHECK(b.lo == a.lo - 1);
            CHECK(b.hi == a.hi - 1);
        }
    }
}
