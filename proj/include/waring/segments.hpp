#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "waring/interval.hpp"

namespace waring {

// Certified geometry of one comb segment s_n = [l_n, u_n):
//   u = ln(n+1)/ln(3/2), t = the root of t^q (n+1-t) = n in (n, n+1),
//   l = ln(t)/ln(3/2). The ceil/floor fields are certified: the enclosures
// exclude every integer, so the rounded values are exact.
struct SegmentBounds {
    std::int64_t n = 0;
    Interval u;
    Interval t;
    Interval l;
    std::int64_t ceil_l = 0;
    std::int64_t ceil_u = 0;
    std::int64_t floor_u = 0;
    bool straddles = false;  // ceil_l == floor_u: an integer inside (l, u)
};

// ln(n+1)/ln(3/2) with the enclosure certified to exclude integers,
// escalating precision as needed. n >= 1.
Interval u_n(std::int64_t n, std::int64_t bits);

// Certified bisection for the unique root of t^q (n+1-t) = n in (n, n+1).
// Endpoint signs are certified before bisection (BracketFailure otherwise);
// the result is an exact dyadic bracket of width 2^-(bits-4). n >= 2.
Interval solve_t_n(std::int64_t n, std::int64_t bits);

// ln(t_n)/ln(3/2), certified non-integer. n >= 2.
Interval l_n(std::int64_t n, std::int64_t bits);

// Certified check of n+1-n^(1-q) <= t_n < n+1. Returns the verdict when
// certified either way; throws PrecisionExhausted when the budget runs out.
bool basic_bound_holds(std::int64_t n, std::int64_t bits);

// floor(ln(n+1)/ln(3/2)), certified. n >= 1.
std::int64_t z_n(std::int64_t n, std::int64_t bits);

SegmentBounds segment_bounds(std::int64_t n, std::int64_t bits);

struct InconclusiveEntry {
    std::int64_t n = 0;
    std::string reason;
};

struct StraddleReport {
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::vector<SegmentBounds> entries;           // successfully certified n, in order
    std::vector<std::int64_t> straddle_hits;
    std::vector<InconclusiveEntry> inconclusive;  // first-class rows, never coerced
    std::int64_t ceil_equal_count = 0;            // n with ceil_l == ceil_u
};

StraddleReport straddle_scan(std::int64_t n_min, std::int64_t n_max, std::int64_t bits);

// Verifies (a) l_n > z_n for every n directly, and (b) the block structure
// that lets the jump indices alone carry (a): z constant between jumps,
// z = i exactly at jump index l_i, and l strictly increasing.
struct TransferReport {
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    bool ok = false;
    std::vector<std::int64_t> jump_indices_in_range;
    std::vector<std::string> direct_failures;
    std::vector<std::string> block_failures;
    std::vector<std::string> monotonicity_failures;
    std::vector<InconclusiveEntry> inconclusive;
};

TransferReport monotonicity_transfer_check(std::int64_t n_min, std::int64_t n_max, std::int64_t bits);
// Same check over bounds that were already computed (shared with straddle_scan).
TransferReport monotonicity_transfer_check(const StraddleReport& scan);

// x(t) = (t^q - t^(q+1)) / (1 - t^q), the inverse of n -> t_n.
// Throws SingularAt1 when the enclosure of t meets 1.
Interval x_of_t(const Interval& t, std::int64_t bits);

// Certified sign of x'(t) = t^(q-1) (t^(q+1) - (q+1)t + q) / (t^q - 1)^2.
CertifiedSign x_prime_sign(const Interval& t, std::int64_t bits);

}  // namespace waring
