#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/interval.hpp"

namespace waring {

enum class LemmaId {
    Lemma1,
    CeilTransfer,
    BasicBound,
    BinomialQ,
    UpperEndpoint,
    LowerEndpoint,
    MRBound,
    XPrimePositive,
    HIncreasing,
};

const char* lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(const std::string& name);

// Aggregated verdict for one named inequality over a range or sample set.
// passes + |failures| + |inconclusive| equals the number of inputs checked;
// equalities counts the passes that were exact equalities rather than
// strict inequalities.
struct LemmaReport {
    LemmaId id = LemmaId::Lemma1;
    std::int64_t range_lo = 0;
    std::int64_t range_hi = -1;
    std::uint64_t sample_count = 0;  // inputs checked (range size or samples)
    std::uint64_t passes = 0;
    std::uint64_t equalities = 0;
    std::vector<std::string> failures;
    std::vector<std::string> inconclusive;
    std::string domain_error;  // nonempty: the range violated the lemma's domain
};

// floor(ln(floor((3/2)^n)+1)/b) = n via the two exact rational inequalities
// 3^n < (m+1) 2^n and (m+1) 2^(n+1) < 3^(n+1). No transcendental arithmetic.
LemmaReport verify_lemma1(std::int64_t lo, std::int64_t hi);

// One ceiling-transfer instance: given n < alpha < n+1 (certified), does
// ln(alpha)/b > floor(ln(n+1)/b) imply ceil(ln(alpha)/b) = ceil(ln(n+1)/b)?
// Throws std::domain_error if the precondition on alpha fails; hypothesis
// failure is reported as a branch, not a counterexample.
struct CeilTransferOutcome {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;  // meaningful only when hypothesis_holds
};
CeilTransferOutcome verify_ceil_transfer(const Interval& alpha, std::int64_t n, std::int64_t bits);

// Ceiling transfer instantiated at alpha = t_n for each n in range.
LemmaReport verify_ceil_transfer_range(std::int64_t lo, std::int64_t hi, std::int64_t bits);

// (a+b)^q <= a^q + q a^(q-1) b + b^q over fixed-seed samples a, b >= 0 plus
// boundary cases. Equalities (a = 0 or b = 0) are recognized exactly.
LemmaReport verify_binomial_q(std::uint64_t samples, std::uint64_t seed, std::int64_t bits);

// ln(floor((3/2)^i)+1)/b < i+1 via the exact inequality (m+1) 2^(i+1) < 3^(i+1).
LemmaReport verify_upper_endpoint(std::int64_t lo, std::int64_t hi);

// H(x) = x+1 - ln((3/2)^x+1)/b: certifies H'(x) > 0 at fixed-seed samples
// x > 0, and H(x) > 0 at the sampled x >= 2.
LemmaReport verify_H_increasing(std::uint64_t samples, std::uint64_t seed, std::int64_t bits);

// x'(t) > 0 at fixed-seed samples t in (0,1) u (1,inf).
LemmaReport verify_x_prime_positive(std::uint64_t samples, std::uint64_t seed, std::int64_t bits);

// m+1-m^(1-q) > (3/2)^i per index, certified two ways: the multiplicative
// form 1-r > m^(1-q) with r = R/2^i exact, and the logarithmic form
// ln(m+1-m^(1-q))/b > i. Certified verdicts from the two routes must agree.
LemmaReport verify_lower_endpoint(std::int64_t lo, std::int64_t hi, std::int64_t bits);

// m + R <= 2^i - 2 exactly, plus the two excluded cases m+R != 2^i and
// m+R != 2^i - 1, the latter independently via 3^i != (2^i - 1)(m+1).
// invert flips the bound comparison (test hook for the violation path).
LemmaReport verify_mr_bound(std::int64_t lo, std::int64_t hi, bool invert = false);

// n+1-n^(1-q) <= t_n < n+1 per n (delegates to segments).
LemmaReport verify_basic_bound(std::int64_t lo, std::int64_t hi, std::int64_t bits);

struct SuiteConfig {
    std::int64_t bits = 128;
    std::uint64_t seed = 0;
    std::int64_t lemma1_lo = 2, lemma1_hi = 10000;
    std::int64_t ceil_lo = 2, ceil_hi = 200;
    std::int64_t basic_lo = 2, basic_hi = 2000;
    std::uint64_t binomial_samples = 10000;
    std::int64_t upper_lo = 2, upper_hi = 10000;
    std::int64_t lower_lo = 2, lower_hi = 2000;
    std::int64_t mr_lo = 3, mr_hi = 100000;
    std::uint64_t xprime_samples = 1000;
    std::uint64_t h_samples = 1000;
    bool invert_mr_bound = false;  // test hook
};

// Runs every verifier; a domain error in one report never aborts siblings.
std::vector<LemmaReport> verify_all(const SuiteConfig& config);

}  // namespace waring
