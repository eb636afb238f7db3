#pragma once

#include <cstdint>

#include "waring/interval.hpp"

namespace waring {

// Certified enclosures of elementary functions over dyadic intervals.
// Everything is computed from integer arithmetic: argument reduction plus
// power series whose truncated tails are padded into the enclosure, with
// every intermediate rounding directed outward. No platform floating point
// is involved in any bound.

// ln(2), ln(3/2) and q = ln 2 / ln(3/2), cached per precision.
Interval ln2_interval(std::int64_t bits);
Interval b_interval(std::int64_t bits);
Interval q_interval(std::int64_t bits);

struct Constants {
    Interval b;  // ln(3/2)
    Interval q;  // ln 2 / ln(3/2)
};
Constants constants(std::int64_t bits);

// Natural log; requires x.lo > 0.
Interval iv_ln(const Interval& x, std::int64_t bits);

// exp over the interval. Arguments are capped at |x| < 2^24.
Interval iv_exp(const Interval& x, std::int64_t bits);

// 2^x. Exact (zero-width) at integer points.
Interval iv_exp2(const Interval& x, std::int64_t bits);

// (3/2)^x. Exact rational 3^n/2^n at nonnegative integer points.
Interval iv_pow_3_2(const Interval& x, std::int64_t bits);

// t^y = exp(y ln t); requires t.lo > 0.
Interval iv_pow(const Interval& t, const Interval& y, std::int64_t bits);

// t^q for the fixed q = ln 2 / ln(3/2); requires t.lo > 0.
Interval iv_pow_q(const Interval& t, std::int64_t bits);

// F2(x) = 2^x ((3/2)^x - floor((3/2)^x)) + floor((3/2)^x).
// Throws FloorAmbiguous when the (3/2)^x enclosure contains an integer, so
// the floor cannot be certified at this precision.
Interval iv_F2(const Interval& x, std::int64_t bits);

// phi2(x) = 2^x + (3/2)^x - 1, the upper envelope.
Interval iv_phi2(const Interval& x, std::int64_t bits);

}  // namespace waring
