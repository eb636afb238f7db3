#include "waring/segments.hpp"

#include <algorithm>
#include <stdexcept>

#include "waring/errors.hpp"
#include "waring/exact.hpp"
#include "waring/real_functions.hpp"

namespace waring {

namespace {

// h(t) = t^q (n+1-t) - n, strictly decreasing on [n, n+1] for n >= 2.
Interval comb_residual(const Interval& t, std::int64_t n, std::int64_t w) {
    Interval tq = iv_pow_q(t, w);
    Interval rest = iv_sub(Interval::of_int(static_cast<long>(n) + 1, w), t, w);
    return iv_sub(iv_mul(tq, rest, w), Interval::of_int(static_cast<long>(n), w), w);
}

std::int64_t floor_as_i64(const Dyadic& d) {
    mpz_class f = floor_to_mpz(d);
    if (!f.fits_slong_p()) throw std::overflow_error("floor out of int64 range");
    return f.get_si();
}

}  // namespace

Interval u_n(std::int64_t n, std::int64_t bits) {
    if (n < 1) throw std::domain_error("u_n requires n >= 1");
    PrecisionLadder ladder = PrecisionLadder::from_bits(bits);
    for (std::int64_t w = bits;; w = std::min(ladder.max, w * 2)) {
        Interval u = iv_div(iv_ln(Interval::of_int(static_cast<long>(n) + 1, w), w), b_interval(w), w);
        if (!contains_integer(u)) {
            u.prec_bits = bits;
            return u;
        }
        if (w >= ladder.max) {
            throw PrecisionExhausted("u_n(" + std::to_string(n) + ") not certified non-integer at " +
                                     std::to_string(w) + " bits");
        }
    }
}

Interval solve_t_n(std::int64_t n, std::int64_t bits) {
    if (n < 2) throw std::domain_error("solve_t_n requires n >= 2");
    PrecisionLadder ladder = PrecisionLadder::from_bits(bits);

    auto sign_at = [&](const Dyadic& point) {
        return certify_sign(
            [&](std::int64_t w) { return comb_residual(Interval::point(point, w), n, w); },
            ladder.start, ladder.max);
    };

    CertifiedSign left = sign_at(Dyadic(static_cast<long>(n)));
    if (left.value != SignValue::Positive) {
        throw BracketFailure("h(" + std::to_string(n) + ") not certified positive for n=" + std::to_string(n));
    }
    CertifiedSign right = sign_at(Dyadic(static_cast<long>(n) + 1));
    if (right.value != SignValue::Negative) {
        throw BracketFailure("h(n+1) not certified negative for n=" + std::to_string(n));
    }

    Dyadic lo(static_cast<long>(n));
    Dyadic hi(static_cast<long>(n) + 1);
    const std::int64_t steps = std::max<std::int64_t>(1, bits - 4);
    for (std::int64_t s = 0; s < steps; ++s) {
        Dyadic mid = ldexp2(lo + hi, -1);
        CertifiedSign cs = sign_at(mid);
        if (cs.value == SignValue::Positive) {
            lo = mid;
        } else if (cs.value == SignValue::Negative) {
            hi = mid;
        } else {
            throw PrecisionExhausted("bisection sign at n=" + std::to_string(n) +
                                     " uncertain at max precision");
        }
    }
    return Interval(lo, hi, bits);
}

Interval l_n(std::int64_t n, std::int64_t bits) {
    if (n < 2) throw std::domain_error("l_n requires n >= 2");
    PrecisionLadder ladder = PrecisionLadder::from_bits(bits);
    for (std::int64_t solve_bits = bits;; solve_bits = std::min(ladder.max, solve_bits * 2)) {
        Interval t = solve_t_n(n, solve_bits);
        for (std::int64_t w = solve_bits;; w = std::min(ladder.max, w * 2)) {
            Interval l = iv_div(iv_ln(t, w), b_interval(w), w);
            if (!contains_integer(l)) {
                l.prec_bits = bits;
                return l;
            }
            if (w >= ladder.max) break;
        }
        if (solve_bits >= ladder.max) {
            throw PrecisionExhausted("l_n(" + std::to_string(n) + ") not certified non-integer");
        }
    }
}

bool basic_bound_holds(std::int64_t n, std::int64_t bits) {
    if (n < 2) throw std::domain_error("basic_bound_holds requires n >= 2");
    PrecisionLadder ladder = PrecisionLadder::from_bits(bits);
    Interval t = solve_t_n(n, bits);
    // Upper half: t_n < n+1. The bracket endpoint is exact.
    if (!(t.hi < Dyadic(static_cast<long>(n) + 1))) {
        throw PrecisionExhausted("t_n bracket did not separate from n+1 at n=" + std::to_string(n));
    }
    // Lower half: n+1 - n^(1-q) <= t_n.
    for (std::int64_t w = ladder.start;; w = std::min(ladder.max, w * 2)) {
        Interval one_minus_q = iv_sub(Interval::of_int(1, w), q_interval(w), w);
        Interval npow = iv_pow(Interval::of_int(static_cast<long>(n), w), one_minus_q, w);
        Interval lower = iv_sub(Interval::of_int(static_cast<long>(n) + 1, w), npow, w);
        if (lower.hi <= t.lo) return true;
        if (lower.lo > t.hi) return false;  // certified counterexample
        if (w >= ladder.max) {
            throw PrecisionExhausted("basic bound not separable at n=" + std::to_string(n));
        }
    }
}

std::int64_t z_n(std::int64_t n, std::int64_t bits) {
    Interval u = u_n(n, bits);  // certified non-integer
    return floor_as_i64(u.lo);
}

SegmentBounds segment_bounds(std::int64_t n, std::int64_t bits) {
    if (n < 2) throw std::domain_error("segment_bounds requires n >= 2");
    SegmentBounds sb;
    sb.n = n;
    sb.u = u_n(n, bits);
    sb.t = solve_t_n(n, bits);
    if (!(sb.t.lo > Dyadic(static_cast<long>(n)) && sb.t.hi < Dyadic(static_cast<long>(n) + 1))) {
        throw BracketFailure("t_n bracket not strictly inside (n, n+1) at n=" + std::to_string(n));
    }

    PrecisionLadder ladder = PrecisionLadder::from_bits(bits);
    Interval l;
    bool ok = false;
    for (std::int64_t w = bits; !ok; w = std::min(ladder.max, w * 2)) {
        l = iv_div(iv_ln(sb.t, w), b_interval(w), w);
        if (!contains_integer(l) && l.hi < sb.u.lo && l.lo.sign() > 0) {
            ok = true;
            break;
        }
        if (w >= ladder.max) break;
    }
    if (!ok) {
        throw PrecisionExhausted("l_n not certified (non-integer, positive, below u_n) at n=" +
                                 std::to_string(n));
    }
    sb.l = l;

    sb.floor_u = floor_as_i64(sb.u.lo);
    sb.ceil_u = sb.floor_u + 1;  // u certified non-integer
    sb.ceil_l = floor_as_i64(sb.l.lo) + 1;  // l certified non-integer
    sb.straddles = (sb.ceil_l == sb.floor_u);
    return sb;
}

StraddleReport straddle_scan(std::int64_t n_min, std::int64_t n_max, std::int64_t bits) {
    if (n_min < 2 || n_min > n_max) throw std::domain_error("straddle_scan requires 2 <= n_min <= n_max");
    StraddleReport rep;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.entries.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        try {
            SegmentBounds sb = segment_bounds(n, bits);
            if (sb.straddles) rep.straddle_hits.push_back(n);
            if (sb.ceil_l == sb.ceil_u) ++rep.ceil_equal_count;
            rep.entries.push_back(std::move(sb));
        } catch (const std::exception& e) {
            rep.inconclusive.push_back(InconclusiveEntry{n, e.what()});
        }
    }
    return rep;
}

TransferReport monotonicity_transfer_check(const StraddleReport& scan) {
    TransferReport rep;
    rep.n_min = scan.n_min;
    rep.n_max = scan.n_max;
    for (const auto& entry : scan.inconclusive) rep.inconclusive.push_back(entry);

    // Jump indices l_i <= n_max from the exact core; z must equal i there.
    std::vector<std::pair<std::int64_t, std::int64_t>> jumps;  // (l_i, i)
    {
        WitnessIterator it(1);
        while (true) {
            if (!it.m().fits_slong_p() || it.m().get_si() > scan.n_max) break;
            std::int64_t li = it.m().get_si();
            if (li >= scan.n_min) jumps.emplace_back(li, static_cast<std::int64_t>(it.k()));
            it.advance();
        }
    }
    for (const auto& [li, i] : jumps) rep.jump_indices_in_range.push_back(li);

    const SegmentBounds* prev = nullptr;
    std::size_t jump_pos = 0;
    for (const SegmentBounds& sb : scan.entries) {
        std::int64_t z = sb.floor_u;  // z_n = floor(ln(n+1)/b)

        // (a) direct check l_n > z_n; l.lo > z certifies it.
        if (!(sb.l.lo > Dyadic(static_cast<long>(z)))) {
            if (sb.l.hi <= Dyadic(static_cast<long>(z))) {
                rep.direct_failures.push_back("l_" + std::to_string(sb.n) + " <= z certified");
            } else {
                rep.inconclusive.push_back(InconclusiveEntry{sb.n, "l_n vs z_n not separated"});
            }
        }

        while (jump_pos < jumps.size() && jumps[jump_pos].first < sb.n) ++jump_pos;
        bool is_jump = jump_pos < jumps.size() && jumps[jump_pos].first == sb.n;
        if (is_jump && z != jumps[jump_pos].second) {
            rep.block_failures.push_back("z_" + std::to_string(sb.n) + " = " + std::to_string(z) +
                                         " but jump index expects " +
                                         std::to_string(jumps[jump_pos].second));
        }
        if (prev && prev->n + 1 == sb.n) {
            std::int64_t expected = prev->floor_u + (is_jump ? 1 : 0);
            if (z != expected) {
                rep.block_failures.push_back("z_" + std::to_string(sb.n) + " = " + std::to_string(z) +
                                             ", expected " + std::to_string(expected));
            }
            if (!(prev->l.hi < sb.l.lo)) {
                rep.monotonicity_failures.push_back("l_" + std::to_string(prev->n) +
                                                    " not certified below l_" + std::to_string(sb.n));
            }
        }
        prev = &sb;
    }

    rep.ok = rep.direct_failures.empty() && rep.block_failures.empty() &&
             rep.monotonicity_failures.empty() && rep.inconclusive.empty();
    return rep;
}

TransferReport monotonicity_transfer_check(std::int64_t n_min, std::int64_t n_max, std::int64_t bits) {
    return monotonicity_transfer_check(straddle_scan(n_min, n_max, bits));
}

Interval x_of_t(const Interval& t, std::int64_t bits) {
    if (t.lo.sign() <= 0) throw std::domain_error("x_of_t requires t > 0");
    if (t.contains(Dyadic(1))) throw SingularAt1("x(t) is undefined at t = 1");
    PrecisionLadder ladder = PrecisionLadder::from_bits(bits);
    for (std::int64_t w = bits;; w = std::min(ladder.max, w * 2)) {
        Interval tq = iv_pow_q(t, w);
        if (!tq.contains(Dyadic(1))) {
            Interval num = iv_sub(tq, iv_mul(tq, t, w), w);  // t^q (1 - t)
            Interval den = iv_sub(Interval::of_int(1, w), tq, w);
            Interval x = iv_div(num, den, w);
            x.prec_bits = bits;
            return x;
        }
        if (w >= ladder.max) {
            throw PrecisionExhausted("t^q enclosure could not be separated from 1");
        }
    }
}

CertifiedSign x_prime_sign(const Interval& t, std::int64_t bits) {
    if (t.lo.sign() <= 0) throw std::domain_error("x_prime_sign requires t > 0");
    if (t.contains(Dyadic(1))) throw SingularAt1("x'(t) is undefined at t = 1");
    PrecisionLadder ladder = PrecisionLadder::from_bits(bits);
    return certify_sign(
        [&](std::int64_t w) -> Interval {
            Interval q = q_interval(w);
            Interval tq = iv_pow_q(t, w);
            Interval dm = iv_sub(tq, Interval::of_int(1, w), w);
            if (dm.contains_zero()) {
                // Cannot form the square's reciprocal yet; force escalation.
                return Interval(Dyadic(-1), Dyadic(1), w);
            }
            Interval qp1 = iv_add(q, Interval::of_int(1, w), w);
            Interval qm1 = iv_sub(q, Interval::of_int(1, w), w);
            Interval numer = iv_add(iv_sub(iv_pow(t, qp1, w), iv_mul(qp1, t, w), w), q, w);
            Interval lead = iv_pow(t, qm1, w);
            Interval den = iv_mul(dm, dm, w);
            return iv_div(iv_mul(lead, numer, w), den, w);
        },
        bits, ladder.max);
}

}  // namespace waring
