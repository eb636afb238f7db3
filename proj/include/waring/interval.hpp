#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "waring/dyadic.hpp"

namespace waring {

// A closed enclosure [lo, hi] of a real value. Every operation rounds
// outward, so the exact result of the corresponding real operation on any
// points of the inputs lies inside the output.
struct Interval {
    Dyadic lo;
    Dyadic hi;
    std::int64_t prec_bits = 0;

    Interval() = default;
    Interval(Dyadic l, Dyadic h, std::int64_t prec);

    static Interval point(const Dyadic& x, std::int64_t prec);
    static Interval of_int(long v, std::int64_t prec);
    static Interval of_mpz(const mpz_class& v, std::int64_t prec);
    // Outward enclosure of an arbitrary rational.
    static Interval of_mpq(const mpq_class& r, std::int64_t prec);

    bool is_point() const { return lo == hi; }
    Dyadic width() const { return hi - lo; }          // exact
    Dyadic midpoint() const;                          // exact (lo+hi)/2
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool strictly_positive() const { return lo.sign() > 0; }
    bool strictly_negative() const { return hi.sign() < 0; }
    bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

Interval iv_add(const Interval& a, const Interval& b, std::int64_t prec);
Interval iv_sub(const Interval& a, const Interval& b, std::int64_t prec);
Interval iv_mul(const Interval& a, const Interval& b, std::int64_t prec);
// Requires b to exclude zero.
Interval iv_div(const Interval& a, const Interval& b, std::int64_t prec);
Interval iv_neg(const Interval& a);
Interval iv_abs(const Interval& a);
// Smallest interval containing both.
Interval iv_hull(const Interval& a, const Interval& b);
// Re-round endpoints outward to prec bits.
Interval iv_round_out(const Interval& a, std::int64_t prec);

// The unique integer z with z <= x < z+1 for every x in the interval, when
// that integer is the same across the whole interval.
std::optional<mpz_class> unique_floor(const Interval& a);
// True if some integer lies in [lo, hi].
bool contains_integer(const Interval& a);

// "width <= 2^log2_bound" as an exact dyadic comparison.
bool width_at_most_pow2(const Interval& a, std::int64_t log2_bound);

enum class SignValue { Negative, Uncertain, Positive };

// A sign verdict backed by an enclosure that excludes zero. Uncertain is
// returned only when the precision budget ran out; it is never wrong, just
// inconclusive.
struct CertifiedSign {
    SignValue value = SignValue::Uncertain;
    std::int64_t bits_used = 0;
};

const char* to_string(SignValue v);

// Evaluate expr at start_bits, doubling until the enclosure excludes zero
// or max_bits is exceeded.
CertifiedSign certify_sign(const std::function<Interval(std::int64_t)>& expr,
                           std::int64_t start_bits, std::int64_t max_bits);

// Doubling precision schedule. The default matches the 64->128->256->512
// ladder; callers may widen max for stubborn certifications.
struct PrecisionLadder {
    std::int64_t start = 64;
    std::int64_t max = 512;
    static PrecisionLadder from_bits(std::int64_t bits) {
        return PrecisionLadder{bits, std::max<std::int64_t>(512, bits * 4)};
    }
};

}  // namespace waring
