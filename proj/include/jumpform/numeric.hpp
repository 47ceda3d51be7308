#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace jumpform {

// Exact arithmetic types used throughout the lattice-side modules.
// Floating point is confined to the detector and to test oracles.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_floor(const Rat& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);  // canonical: den > 0
    Int q = num / den;               // truncates toward zero
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    Int q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

inline bool is_even(const Int& x) { return x % 2 == 0; }

}  // namespace jumpform
