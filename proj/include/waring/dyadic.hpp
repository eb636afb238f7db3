#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace waring {

// Rounding direction for operations that drop mantissa bits.
// Down = toward -infinity, Up = toward +infinity.
enum class Round { Down, Up };

// A dyadic rational mant * 2^exp with an arbitrary-precision mantissa.
// Every finite value is stored exactly; rounding happens only where a
// caller asks for it (round_to, div_to). Zero is canonically {0, 0}.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long v) : mant_(v), exp_(0) { normalize(); }          // NOLINT(google-explicit-constructor)
    Dyadic(const mpz_class& m, std::int64_t e) : mant_(m), exp_(e) { normalize(); }

    const mpz_class& mant() const { return mant_; }
    std::int64_t exp() const { return exp_; }

    bool is_zero() const { return mant_ == 0; }
    int sign() const { return sgn(mant_); }

    // Bit length of |mant|; 0 for zero.
    std::size_t mant_bits() const {
        return mant_ == 0 ? 0 : mpz_sizeinbase(mant_.get_mpz_t(), 2);
    }

    // floor(log2 |x|). Requires x != 0.
    std::int64_t msb() const {
        return exp_ + static_cast<std::int64_t>(mant_bits()) - 1;
    }

    Dyadic operator-() const {
        Dyadic r;
        r.mant_ = -mant_;
        r.exp_ = exp_;
        return r;
    }

private:
    // Strip trailing zero bits so equal values share a representation.
    void normalize() {
        if (mant_ == 0) {
            exp_ = 0;
            return;
        }
        mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
        if (tz > 0) {
            mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
            exp_ += static_cast<std::int64_t>(tz);
        }
    }

    mpz_class mant_;
    std::int64_t exp_;
};

// Exact arithmetic.
Dyadic operator+(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a, const Dyadic& b);
Dyadic operator*(const Dyadic& a, const Dyadic& b);

// x * 2^k, exact.
Dyadic ldexp2(const Dyadic& x, std::int64_t k);

// Exact three-way comparison: sign of a - b.
int cmp(const Dyadic& a, const Dyadic& b);

inline bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) != 0; }

// Keep at most prec_bits mantissa bits, rounding in the given direction.
Dyadic round_to(const Dyadic& x, std::int64_t prec_bits, Round dir);

// a / b with at least prec_bits significant bits, directed rounding.
// Requires b != 0.
Dyadic div_to(const Dyadic& a, const Dyadic& b, std::int64_t prec_bits, Round dir);

mpz_class floor_to_mpz(const Dyadic& x);
mpz_class ceil_to_mpz(const Dyadic& x);
bool is_integer(const Dyadic& x);

mpq_class to_mpq(const Dyadic& x);

// Nearest dyadic with prec_bits mantissa bits in the given direction.
Dyadic dyadic_from_mpq(const mpq_class& r, std::int64_t prec_bits, Round dir);

// Deterministic decimal rendering, truncated toward zero after sig_digits
// significant digits. Integers print without an exponent; everything else
// prints as d.dd...e±X.
std::string to_decimal(const Dyadic& x, int sig_digits);

}  // namespace waring
