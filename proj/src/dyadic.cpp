#include "waring/dyadic.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace waring {

namespace {

// Both operands rebased to the smaller exponent; exact.
void align(const Dyadic& a, const Dyadic& b, mpz_class& ma, mpz_class& mb, std::int64_t& e) {
    e = std::min(a.is_zero() ? b.exp() : a.exp(), b.is_zero() ? a.exp() : b.exp());
    ma = a.mant();
    mb = b.mant();
    if (a.exp() > e && ma != 0) ma <<= static_cast<unsigned long>(a.exp() - e);
    if (b.exp() > e && mb != 0) mb <<= static_cast<unsigned long>(b.exp() - e);
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    mpz_class ma, mb;
    std::int64_t e;
    align(a, b, ma, mb, e);
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    mpz_class ma, mb;
    std::int64_t e;
    align(a, b, ma, mb, e);
    return Dyadic(ma - mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.mant() * b.mant(), a.exp() + b.exp());
}

Dyadic ldexp2(const Dyadic& x, std::int64_t k) {
    if (x.is_zero()) return x;
    return Dyadic(x.mant(), x.exp() + k);
}

int cmp(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // Same nonzero sign: compare magnitudes via msb first, then exactly.
    std::int64_t pa = a.msb(), pb = b.msb();
    if (pa != pb) {
        int mag = pa < pb ? -1 : 1;
        return sa > 0 ? mag : -mag;
    }
    mpz_class ma, mb;
    std::int64_t e;
    align(a, b, ma, mb, e);
    return ::cmp(ma, mb) < 0 ? -1 : (ma == mb ? 0 : 1);
}

Dyadic round_to(const Dyadic& x, std::int64_t prec_bits, Round dir) {
    assert(prec_bits >= 1);
    std::int64_t n = static_cast<std::int64_t>(x.mant_bits());
    if (n <= prec_bits) return x;
    std::int64_t drop = n - prec_bits;
    mpz_class m;
    if (dir == Round::Down) {
        mpz_fdiv_q_2exp(m.get_mpz_t(), x.mant().get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    } else {
        mpz_cdiv_q_2exp(m.get_mpz_t(), x.mant().get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    }
    return Dyadic(m, x.exp() + drop);
}

Dyadic div_to(const Dyadic& a, const Dyadic& b, std::int64_t prec_bits, Round dir) {
    if (b.is_zero()) throw std::domain_error("dyadic division by zero");
    if (a.is_zero()) return Dyadic();
    std::int64_t la = static_cast<std::int64_t>(a.mant_bits());
    std::int64_t lb = static_cast<std::int64_t>(b.mant_bits());
    std::int64_t shift = std::max<std::int64_t>(0, prec_bits + 2 + lb - la);
    mpz_class num = a.mant();
    if (shift > 0) num <<= static_cast<unsigned long>(shift);
    mpz_class q;
    // fdiv/cdiv on the (possibly negative) numerator give floor/ceil of the
    // true quotient, which is exactly directed rounding toward -inf/+inf.
    mpz_class den = b.mant();
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    if (dir == Round::Down) {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return Dyadic(q, a.exp() - b.exp() - shift);
}

mpz_class floor_to_mpz(const Dyadic& x) {
    mpz_class r;
    if (x.exp() >= 0) {
        r = x.mant();
        if (r != 0 && x.exp() > 0) r <<= static_cast<unsigned long>(x.exp());
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), x.mant().get_mpz_t(), static_cast<mp_bitcnt_t>(-x.exp()));
    }
    return r;
}

mpz_class ceil_to_mpz(const Dyadic& x) {
    mpz_class r;
    if (x.exp() >= 0) {
        r = x.mant();
        if (r != 0 && x.exp() > 0) r <<= static_cast<unsigned long>(x.exp());
    } else {
        mpz_cdiv_q_2exp(r.get_mpz_t(), x.mant().get_mpz_t(), static_cast<mp_bitcnt_t>(-x.exp()));
    }
    return r;
}

bool is_integer(const Dyadic& x) {
    return x.is_zero() || x.exp() >= 0;  // mantissa is odd after normalization
}

mpq_class to_mpq(const Dyadic& x) {
    mpq_class q(x.mant());
    if (x.exp() >= 0) {
        mpz_class num = x.mant();
        if (num != 0 && x.exp() > 0) num <<= static_cast<unsigned long>(x.exp());
        q = mpq_class(num);
    } else {
        mpz_class den = 1;
        den <<= static_cast<unsigned long>(-x.exp());
        q = mpq_class(x.mant(), den);
        q.canonicalize();
    }
    return q;
}

Dyadic dyadic_from_mpq(const mpq_class& r, std::int64_t prec_bits, Round dir) {
    Dyadic num(r.get_num(), 0);
    Dyadic den(r.get_den(), 0);
    return div_to(num, den, prec_bits, dir);
}

std::string to_decimal(const Dyadic& x, int sig_digits) {
    assert(sig_digits >= 1);
    if (x.is_zero()) return "0";
    if (is_integer(x)) {
        mpz_class v = floor_to_mpz(x);
        return v.get_str();
    }
    bool neg = x.sign() < 0;
    Dyadic ax = neg ? -x : x;

    // Decimal exponent D with 10^D <= ax < 10^(D+1), found by estimate
    // plus exact correction.
    auto cmp_pow10 = [&ax](std::int64_t d) {
        // sign of ax - 10^d
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(d >= 0 ? d : -d));
        if (d >= 0) return cmp(ax, Dyadic(p10, 0));
        // ax vs 10^d  <=>  ax * 10^(-d) vs 1
        Dyadic scaled = ax * Dyadic(p10, 0);
        return cmp(scaled, Dyadic(1));
    };
    double est = static_cast<double>(ax.msb()) * 0.30102999566398119;
    std::int64_t dec_exp = static_cast<std::int64_t>(est);
    while (cmp_pow10(dec_exp) < 0) --dec_exp;
    while (cmp_pow10(dec_exp + 1) >= 0) ++dec_exp;

    // digits = floor(ax * 10^(sig-1-D)), an integer with sig_digits digits.
    std::int64_t k = sig_digits - 1 - dec_exp;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(k >= 0 ? k : -k));
    std::int64_t div_prec = 4 * static_cast<std::int64_t>(sig_digits) + 64;
    Dyadic scaled = k >= 0 ? ax * Dyadic(p10, 0) : div_to(ax, Dyadic(p10, 0), div_prec, Round::Down);
    mpz_class digits = floor_to_mpz(scaled);
    std::string s = digits.get_str();
    // Guard the rare carry when rounding pushed us to 10^sig.
    if (static_cast<int>(s.size()) > sig_digits) {
        s.resize(static_cast<std::size_t>(sig_digits));
        ++dec_exp;
    }
    std::string out = neg ? "-" : "";
    out += s.substr(0, 1);
    if (s.size() > 1) {
        out += ".";
        out += s.substr(1);
    }
    out += "e";
    out += (dec_exp < 0 ? "-" : "+");
    std::string e = std::to_string(dec_exp < 0 ? -dec_exp : dec_exp);
    if (e.size() < 2) e.insert(e.begin(), '0');
    out += e;
    return out;
}

}  // namespace waring
