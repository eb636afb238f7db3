#include "waring/interval.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace waring {

Interval::Interval(Dyadic l, Dyadic h, std::int64_t prec) : lo(std::move(l)), hi(std::move(h)), prec_bits(prec) {
    assert(lo <= hi);
}

Interval Interval::point(const Dyadic& x, std::int64_t prec) { return Interval(x, x, prec); }

Interval Interval::of_int(long v, std::int64_t prec) { return point(Dyadic(v), prec); }

Interval Interval::of_mpz(const mpz_class& v, std::int64_t prec) { return point(Dyadic(v, 0), prec); }

Interval Interval::of_mpq(const mpq_class& r, std::int64_t prec) {
    return Interval(dyadic_from_mpq(r, prec, Round::Down), dyadic_from_mpq(r, prec, Round::Up), prec);
}

Dyadic Interval::midpoint() const { return ldexp2(lo + hi, -1); }

Interval iv_add(const Interval& a, const Interval& b, std::int64_t prec) {
    return Interval(round_to(a.lo + b.lo, prec, Round::Down),
                    round_to(a.hi + b.hi, prec, Round::Up), prec);
}

Interval iv_sub(const Interval& a, const Interval& b, std::int64_t prec) {
    return Interval(round_to(a.lo - b.hi, prec, Round::Down),
                    round_to(a.hi - b.lo, prec, Round::Up), prec);
}

Interval iv_mul(const Interval& a, const Interval& b, std::int64_t prec) {
    // Exact endpoint products, then one outward rounding.
    const Dyadic p1 = a.lo * b.lo;
    const Dyadic p2 = a.lo * b.hi;
    const Dyadic p3 = a.hi * b.lo;
    const Dyadic p4 = a.hi * b.hi;
    const Dyadic* lo = &p1;
    const Dyadic* hi = &p1;
    for (const Dyadic* p : {&p2, &p3, &p4}) {
        if (*p < *lo) lo = p;
        if (*p > *hi) hi = p;
    }
    return Interval(round_to(*lo, prec, Round::Down), round_to(*hi, prec, Round::Up), prec);
}

Interval iv_div(const Interval& a, const Interval& b, std::int64_t prec) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    Dyadic lo, hi;
    bool first = true;
    for (const Dyadic* x : {&a.lo, &a.hi}) {
        for (const Dyadic* y : {&b.lo, &b.hi}) {
            Dyadic qd = div_to(*x, *y, prec, Round::Down);
            Dyadic qu = div_to(*x, *y, prec, Round::Up);
            if (first) {
                lo = qd;
                hi = qu;
                first = false;
            } else {
                if (qd < lo) lo = qd;
                if (qu > hi) hi = qu;
            }
        }
    }
    return Interval(lo, hi, prec);
}

Interval iv_neg(const Interval& a) { return Interval(-a.hi, -a.lo, a.prec_bits); }

Interval iv_abs(const Interval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return iv_neg(a);
    Dyadic m = -a.lo > a.hi ? -a.lo : a.hi;
    return Interval(Dyadic(0), m, a.prec_bits);
}

Interval iv_hull(const Interval& a, const Interval& b) {
    return Interval(a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi,
                    std::min(a.prec_bits, b.prec_bits));
}

Interval iv_round_out(const Interval& a, std::int64_t prec) {
    return Interval(round_to(a.lo, prec, Round::Down), round_to(a.hi, prec, Round::Up), prec);
}

std::optional<mpz_class> unique_floor(const Interval& a) {
    mpz_class flo = floor_to_mpz(a.lo);
    mpz_class fhi = floor_to_mpz(a.hi);
    if (flo == fhi) return flo;
    return std::nullopt;
}

bool contains_integer(const Interval& a) {
    // exists integer k with lo <= k <= hi  <=>  ceil(lo) <= floor(hi)
    return ceil_to_mpz(a.lo) <= floor_to_mpz(a.hi);
}

bool width_at_most_pow2(const Interval& a, std::int64_t log2_bound) {
    Dyadic w = a.width();
    if (w.is_zero()) return true;
    return w <= Dyadic(mpz_class(1), log2_bound);
}

const char* to_string(SignValue v) {
    switch (v) {
        case SignValue::Negative: return "negative";
        case SignValue::Positive: return "positive";
        default: return "uncertain";
    }
}

CertifiedSign certify_sign(const std::function<Interval(std::int64_t)>& expr,
                           std::int64_t start_bits, std::int64_t max_bits) {
    if (start_bits > max_bits) throw std::domain_error("certify_sign: start_bits > max_bits");
    std::int64_t bits = start_bits;
    while (true) {
        Interval v = expr(bits);
        if (v.strictly_positive()) return CertifiedSign{SignValue::Positive, bits};
        if (v.strictly_negative()) return CertifiedSign{SignValue::Negative, bits};
        if (bits >= max_bits) return CertifiedSign{SignValue::Uncertain, bits};
        bits = std::min(max_bits, bits * 2);
    }
}

}  // namespace waring
