#include "waring/real_functions.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

namespace {

Dyadic pow2_dyadic(std::int64_t e) { return Dyadic(mpz_class(1), e); }

Interval ldexp_interval(const Interval& a, std::int64_t k) {
    return Interval(ldexp2(a.lo, k), ldexp2(a.hi, k), a.prec_bits);
}

Dyadic magnitude_bound(const Interval& v) {
    Dyadic a = v.lo.sign() < 0 ? -v.lo : v.lo;
    Dyadic b = v.hi.sign() < 0 ? -v.hi : v.hi;
    return a > b ? a : b;
}

// atanh on an enclosure with |u| <= 1/4 + eps: sum u^(2j+1)/(2j+1) until the
// term magnitude drops below 2^(-w-6), then pad by one full term magnitude.
// The remaining tail is at most term * u^2/(1-u^2) < term, so the pad covers it.
Interval atanh_small(const Interval& u, std::int64_t w) {
    assert(magnitude_bound(u) < Dyadic(mpz_class(1), -2) + Dyadic(mpz_class(1), -8));
    const Dyadic cutoff = pow2_dyadic(-w - 6);
    Interval u2 = iv_mul(u, u, w);
    Interval power = u;          // u^(2j+1)
    Interval sum = u;
    long denom = 3;
    while (true) {
        power = iv_mul(power, u2, w);
        Interval term = iv_div(power, Interval::of_int(denom, w), w);
        Dyadic mag = magnitude_bound(term);
        sum = iv_add(sum, term, w);
        if (mag <= cutoff) {
            Interval pad(-mag, mag, w);
            return iv_add(sum, pad, w);
        }
        denom += 2;
        if (denom > 1000000) throw PrecisionExhausted("atanh series failed to converge");
    }
}

// ln of a positive dyadic point. Reduction x = m * 2^k with m in (3/4, 3/2],
// then ln x = 2 atanh((m-1)/(m+1)) + k ln 2.
Interval ln_point(const Dyadic& x, std::int64_t bits) {
    assert(x.sign() > 0);
    if (x == Dyadic(1)) return Interval::point(Dyadic(0), bits);
    std::int64_t k = x.msb();  // x in [2^k, 2^(k+1))
    Dyadic m = ldexp2(x, -k);  // in [1, 2)
    if (m > Dyadic(3, -1)) {
        m = ldexp2(m, -1);     // in (3/4, 1)
        k += 1;
    }
    std::int64_t kbits = 1;
    for (std::int64_t t = k < 0 ? -k : k; t > 0; t >>= 1) ++kbits;
    const std::int64_t w = bits + 16 + kbits;

    Interval result(Dyadic(0), Dyadic(0), w);
    if (m != Dyadic(1)) {
        Dyadic num = m - Dyadic(1);
        Dyadic den = m + Dyadic(1);
        Interval u(div_to(num, den, w, Round::Down), div_to(num, den, w, Round::Up), w);
        result = iv_add(result, ldexp_interval(atanh_small(u, w), 1), w);
    }
    if (k != 0) {
        Interval kln2 = iv_mul(Interval::of_int(static_cast<long>(k), w), ln2_interval(w), w);
        result = iv_add(result, kln2, w);
    }
    result.prec_bits = bits;
    return result;
}

// exp of a dyadic point: r = d / 2^j with |r| <= 1/2, Taylor series, then j
// squarings. The pad after the last term covers the tail because successive
// term ratios are below |r|/(N+1) <= 1/4.
Interval exp_point(const Dyadic& d, std::int64_t bits) {
    if (d.is_zero()) return Interval::point(Dyadic(1), bits);
    if (d.msb() > (d.sign() > 0 ? 16 : 24)) {
        throw std::domain_error("exp argument magnitude out of supported range");
    }
    std::int64_t s = d.msb();
    std::int64_t j = s + 2 > 0 ? s + 2 : 0;
    Dyadic r = ldexp2(d, -j);

    std::int64_t mag_bits = 0;
    if (d.sign() > 0) {
        mpz_class c = ceil_to_mpz(d);
        mag_bits = (static_cast<std::int64_t>(c.get_si()) * 3) / 2 + 2;
    }
    const std::int64_t w = bits + 2 * j + 16 + mag_bits;
    const Dyadic cutoff = pow2_dyadic(-w - 6);

    Interval rr = Interval::point(r, w);
    Interval term = Interval::point(Dyadic(1), w);
    Interval sum = term;
    long n = 1;
    while (true) {
        term = iv_div(iv_mul(term, rr, w), Interval::of_int(n, w), w);
        Dyadic mag = magnitude_bound(term);
        sum = iv_add(sum, term, w);
        if (mag <= cutoff) {
            sum = iv_add(sum, Interval(-mag, mag, w), w);
            break;
        }
        ++n;
        if (n > 1000000) throw PrecisionExhausted("exp series failed to converge");
    }
    for (std::int64_t i = 0; i < j; ++i) sum = iv_mul(sum, sum, w);
    assert(sum.lo.sign() > 0);
    sum.prec_bits = bits;
    return sum;
}

std::mutex g_const_mutex;
std::map<std::int64_t, Interval> g_ln2_cache;
std::map<std::int64_t, Interval> g_b_cache;
std::map<std::int64_t, Interval> g_q_cache;

Interval atanh_inv(long odd_den, std::int64_t w) {
    Dyadic one(1);
    Dyadic den(odd_den);
    Interval u(div_to(one, den, w, Round::Down), div_to(one, den, w, Round::Up), w);
    return atanh_small(u, w);
}

}  // namespace

Interval ln2_interval(std::int64_t bits) {
    {
        std::lock_guard<std::mutex> lock(g_const_mutex);
        auto it = g_ln2_cache.find(bits);
        if (it != g_ln2_cache.end()) return it->second;
    }
    // ln 2 = ln(3/2) + ln(4/3) = 2 atanh(1/5) + 2 atanh(1/7)
    const std::int64_t w = bits + 8;
    Interval v = ldexp_interval(iv_add(atanh_inv(5, w), atanh_inv(7, w), w), 1);
    v.prec_bits = bits;
    std::lock_guard<std::mutex> lock(g_const_mutex);
    g_ln2_cache.emplace(bits, v);
    return v;
}

Interval b_interval(std::int64_t bits) {
    {
        std::lock_guard<std::mutex> lock(g_const_mutex);
        auto it = g_b_cache.find(bits);
        if (it != g_b_cache.end()) return it->second;
    }
    const std::int64_t w = bits + 8;
    Interval v = ldexp_interval(atanh_inv(5, w), 1);
    v.prec_bits = bits;
    std::lock_guard<std::mutex> lock(g_const_mutex);
    g_b_cache.emplace(bits, v);
    return v;
}

Interval q_interval(std::int64_t bits) {
    {
        std::lock_guard<std::mutex> lock(g_const_mutex);
        auto it = g_q_cache.find(bits);
        if (it != g_q_cache.end()) return it->second;
    }
    const std::int64_t w = bits + 8;
    Interval v = iv_div(ln2_interval(w), b_interval(w), w);
    v.prec_bits = bits;
    std::lock_guard<std::mutex> lock(g_const_mutex);
    g_q_cache.emplace(bits, v);
    return v;
}

Constants constants(std::int64_t bits) { return Constants{b_interval(bits), q_interval(bits)}; }

Interval iv_ln(const Interval& x, std::int64_t bits) {
    if (x.lo.sign() <= 0) throw std::domain_error("iv_ln requires a strictly positive interval");
    // ln is increasing: endpoint enclosures give the full enclosure.
    Interval xr = iv_round_out(x, bits + 24);
    Interval lo = ln_point(xr.lo, bits);
    if (xr.is_point()) return lo;
    Interval hi = ln_point(xr.hi, bits);
    return Interval(lo.lo, hi.hi, bits);
}

Interval iv_exp(const Interval& x, std::int64_t bits) {
    Interval xr = iv_round_out(x, bits + 24);
    Interval lo = exp_point(xr.lo, bits);
    if (xr.is_point()) return lo;
    Interval hi = exp_point(xr.hi, bits);
    return Interval(lo.lo, hi.hi, bits);
}

namespace {

// Zero-width integer point of small magnitude, if the interval is one.
bool integer_point(const Interval& x, std::int64_t& out) {
    if (!x.is_point() || !is_integer(x.lo)) return false;
    mpz_class v = floor_to_mpz(x.lo);
    if (!v.fits_slong_p()) return false;
    long n = v.get_si();
    if (n < -(1L << 24) || n > (1L << 24)) return false;
    out = n;
    return true;
}

}  // namespace

Interval iv_exp2(const Interval& x, std::int64_t bits) {
    std::int64_t n = 0;
    if (integer_point(x, n)) return Interval::point(pow2_dyadic(n), bits);
    return iv_exp(iv_mul(x, ln2_interval(bits + 8), bits + 8), bits);
}

Interval iv_pow_3_2(const Interval& x, std::int64_t bits) {
    std::int64_t n = 0;
    if (integer_point(x, n) && n >= 0) {
        mpz_class p3;
        mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(n));
        return Interval::point(Dyadic(p3, -n), bits);
    }
    return iv_exp(iv_mul(x, b_interval(bits + 8), bits + 8), bits);
}

Interval iv_pow(const Interval& t, const Interval& y, std::int64_t bits) {
    if (t.lo.sign() <= 0) throw std::domain_error("iv_pow requires a strictly positive base");
    return iv_exp(iv_mul(iv_ln(t, bits + 8), y, bits + 8), bits);
}

Interval iv_pow_q(const Interval& t, std::int64_t bits) {
    return iv_pow(t, q_interval(bits + 8), bits);
}

Interval iv_F2(const Interval& x, std::int64_t bits) {
    const std::int64_t w = bits + 8;
    Interval a = iv_pow_3_2(x, w);
    auto fl = unique_floor(a);
    if (!fl) {
        throw FloorAmbiguous("(3/2)^x enclosure [" + to_decimal(a.lo, 25) + ", " +
                             to_decimal(a.hi, 25) + "] contains an integer");
    }
    Interval n = Interval::of_mpz(*fl, w);
    Interval frac = iv_sub(a, n, w);
    Interval p2 = iv_exp2(x, w);
    Interval r = iv_add(iv_mul(p2, frac, w), n, w);
    r.prec_bits = bits;
    return r;
}

Interval iv_phi2(const Interval& x, std::int64_t bits) {
    const std::int64_t w = bits + 8;
    Interval r = iv_sub(iv_add(iv_exp2(x, w), iv_pow_3_2(x, w), w), Interval::of_int(1, w), w);
    r.prec_bits = bits;
    return r;
}

}  // namespace waring
