#include "waring/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace waring {

PowerWitness power_witness(std::uint64_t k) {
    if (k < 1) throw std::domain_error("power_witness requires k >= 1");
    PowerWitness w;
    w.k = k;
    mpz_ui_pow_ui(w.pow3.get_mpz_t(), 3, k);
    w.pow2 = 1;
    w.pow2 <<= k;
    mpz_fdiv_qr(w.m.get_mpz_t(), w.R.get_mpz_t(), w.pow3.get_mpz_t(), w.pow2.get_mpz_t());
    return w;
}

CarryVerdict carry_holds(std::uint64_t k) {
    PowerWitness w = power_witness(k);
    CarryVerdict v;
    v.k = k;
    v.lhs = w.R + w.m;
    v.rhs = w.pow2;
    v.slack = v.rhs - v.lhs;
    v.holds = v.slack < 0;
    return v;
}

WitnessIterator::WitnessIterator(std::uint64_t k_start, bool track_pow3)
    : k_(k_start), track_pow3_(track_pow3) {
    PowerWitness w = power_witness(k_start);
    pow2_ = w.pow2;
    m_ = w.m;
    R_ = w.R;
    if (track_pow3_) pow3_ = w.pow3;
}

void WitnessIterator::advance() {
    // 3^(k+1) = 3m 2^k + 3R. Split 3m = 2a + d (d in {0,1}); the remainder
    // candidate d 2^k + 3R is below 2^(k+2), so at most one renormalization.
    mpz_class three_m = 3 * m_;
    int d = mpz_odd_p(three_m.get_mpz_t()) ? 1 : 0;
    mpz_class a = three_m >> 1;
    mpz_class rem = 3 * R_;
    if (d) rem += pow2_;
    pow2_ <<= 1;  // now 2^(k+1)
    if (rem >= pow2_) {
        a += 1;
        rem -= pow2_;
    }
    m_ = a;
    R_ = rem;
    if (track_pow3_) pow3_ *= 3;
    ++k_;
}

const mpz_class& WitnessIterator::pow3() const {
    if (!track_pow3_) throw std::logic_error("WitnessIterator was not tracking pow3");
    return pow3_;
}

CarryScanReport scan_carry(std::uint64_t k_min, std::uint64_t k_max) {
    if (k_min < 1 || k_min > k_max) throw std::domain_error("scan_carry requires 1 <= k_min <= k_max");
    CarryScanReport rep;
    rep.k_min = k_min;
    rep.k_max = k_max;
    WitnessIterator it(k_min);
    bool have_min = false;
    for (std::uint64_t k = k_min;; ++k) {
        mpz_class slack = it.pow2() - it.m() - it.R();
        if (slack < 0) rep.violations.push_back(k);
        if (slack == 0) rep.zero_slack_ks.push_back(k);
        if (!have_min || slack < rep.min_slack) {
            rep.min_slack = slack;
            rep.min_slack_k = k;
            have_min = true;
        }
        if (k == k_max) break;
        it.advance();
    }
    return rep;
}

bool mr_slack_check(std::uint64_t i) {
    if (i < 3) throw std::domain_error("mr_slack_check requires i >= 3");
    PowerWitness w = power_witness(i);
    return w.m + w.R <= w.pow2 - 2;
}

GkValue g_of_k(std::uint64_t k) {
    PowerWitness w = power_witness(k);
    GkValue g;
    g.k = k;
    g.g = w.pow2 + w.m - 2;
    return g;
}

unsigned brute_force_g(std::uint64_t k, std::uint64_t limit, std::uint64_t memory_budget_bytes) {
    if (k < 1 || limit < 1) throw std::domain_error("brute_force_g requires k >= 1 and limit >= 1");
    if ((limit + 1) * sizeof(std::uint16_t) > memory_budget_bytes) {
        throw std::domain_error("brute_force_g: table would exceed the memory budget");
    }
    if (k == 1) return 1;

    std::vector<std::uint64_t> powers;
    for (std::uint64_t base = 1;; ++base) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(k));
        if (p > limit) break;
        powers.push_back(p.get_ui());
    }

    constexpr std::uint16_t kUnset = 0xffff;
    std::vector<std::uint16_t> count(limit + 1, kUnset);
    count[0] = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        std::uint16_t best = kUnset;
        for (std::uint64_t p : powers) {
            if (p > n) break;
            std::uint16_t c = count[n - p];
            if (c != kUnset && c + 1 < best) best = static_cast<std::uint16_t>(c + 1);
        }
        count[n] = best;
    }
    std::uint16_t worst = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) worst = std::max(worst, count[n]);
    return worst;
}

std::vector<std::pair<std::uint64_t, mpz_class>> jump_indices(std::uint64_t i_max) {
    if (i_max < 1) throw std::domain_error("jump_indices requires i_max >= 1");
    std::vector<std::pair<std::uint64_t, mpz_class>> out;
    out.reserve(i_max);
    WitnessIterator it(1);
    for (std::uint64_t i = 1;; ++i) {
        out.emplace_back(i, it.m());
        if (i == i_max) break;
        it.advance();
    }
    return out;
}

}  // namespace waring
