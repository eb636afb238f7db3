#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace waring {

// Exact decomposition 3^k = m * 2^k + R with 0 <= R < 2^k.
// m = floor((3/2)^k) and R/2^k is the fractional part of (3/2)^k.
struct PowerWitness {
    std::uint64_t k = 0;
    mpz_class pow3;
    mpz_class pow2;
    mpz_class m;
    mpz_class R;
};

PowerWitness power_witness(std::uint64_t k);  // k >= 1

// The strict inequality R + m > 2^k, with its exact slack 2^k - (R + m).
// holds <=> slack < 0.
struct CarryVerdict {
    std::uint64_t k = 0;
    mpz_class lhs;   // R + m
    mpz_class rhs;   // 2^k
    bool holds = false;
    mpz_class slack;  // rhs - lhs
};

CarryVerdict carry_holds(std::uint64_t k);  // k >= 1

struct CarryScanReport {
    std::uint64_t k_min = 0;
    std::uint64_t k_max = 0;
    std::vector<std::uint64_t> violations;      // k where the inequality holds strictly
    std::vector<std::uint64_t> zero_slack_ks;   // equality cases
    mpz_class min_slack;
    std::uint64_t min_slack_k = 0;
};

// Scans [k_min, k_max] with the incremental (m, R) recurrence; never
// recomputes powers from scratch.
CarryScanReport scan_carry(std::uint64_t k_min, std::uint64_t k_max);

// m + R <= 2^i - 2, exact. Rejects i < 3.
bool mr_slack_check(std::uint64_t i);

struct GkValue {
    std::uint64_t k = 0;
    mpz_class g;  // 2^k + floor((3/2)^k) - 2
};

GkValue g_of_k(std::uint64_t k);  // k >= 1

// Minimum s such that every integer in [1, limit] is a sum of at most s
// positive k-th powers, by dynamic programming over representation counts.
// Exact for g(k) whenever limit covers the extremal integer (7 for k=2,
// 23 for k=3). Rejects tables beyond memory_budget_bytes.
unsigned brute_force_g(std::uint64_t k, std::uint64_t limit,
                       std::uint64_t memory_budget_bytes = std::uint64_t(1) << 28);

// (i, l_i) with l_i = floor((3/2)^i) for i = 1..i_max.
std::vector<std::pair<std::uint64_t, mpz_class>> jump_indices(std::uint64_t i_max);

// Incremental witness state: advance() moves k -> k+1 using
// 3^(k+1) = 3m 2^k + 3R, renormalizing 3R at the new modulus 2^(k+1).
// pow3 is maintained only when requested (the carry scan does not need it).
class WitnessIterator {
public:
    explicit WitnessIterator(std::uint64_t k_start, bool track_pow3 = false);
    void advance();

    std::uint64_t k() const { return k_; }
    const mpz_class& pow2() const { return pow2_; }
    const mpz_class& m() const { return m_; }
    const mpz_class& R() const { return R_; }
    const mpz_class& pow3() const;  // throws if not tracked

private:
    std::uint64_t k_;
    bool track_pow3_;
    mpz_class pow2_;
    mpz_class pow3_;
    mpz_class m_;
    mpz_class R_;
};

}  // namespace waring
