#include "waring/report.hpp"

#include <sstream>
#include <stdexcept>

namespace waring {

int exit_code_for(std::uint64_t failures, std::uint64_t inconclusive) {
    if (failures > 0) return kExitViolation;
    if (inconclusive > 0) return kExitInconclusive;
    return kExitPass;
}

mpq_class parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty decimal literal");
    std::string s = text;
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string digits;
    std::int64_t frac_digits = 0;
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal literal: " + text);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("malformed decimal literal: " + text);
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed decimal literal: " + text);
    mpz_class num(digits, 10);
    if (neg) num = -num;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string format_decimal(const mpq_class& value) {
    mpz_class num = value.get_num();
    mpz_class den = value.get_den();
    // Scale the denominator to a power of ten: den = 2^a 5^b.
    unsigned long a = mpz_scan1(den.get_mpz_t(), 0);
    mpz_class rest;
    mpz_fdiv_q_2exp(rest.get_mpz_t(), den.get_mpz_t(), a);
    unsigned long b = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 5);
        ++b;
    }
    if (rest != 1) throw std::invalid_argument("rational has no finite decimal expansion");
    unsigned long k = std::max(a, b);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    mpz_class scaled = num * (scale / den);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.get_str();
    std::string out;
    if (k == 0) {
        out = s;
    } else {
        if (s.size() <= k) s.insert(0, k + 1 - s.size(), '0');
        out = s.substr(0, s.size() - k) + "." + s.substr(s.size() - k);
    }
    return neg ? "-" + out : out;
}

namespace {

ordered_json lemma_json(const LemmaReport& r) {
    ordered_json j;
    j["lemma"] = lemma_name(r.id);
    if (r.range_hi >= r.range_lo) j["range"] = {r.range_lo, r.range_hi};
    j["checked"] = r.sample_count;
    j["passes"] = r.passes;
    j["equalities"] = r.equalities;
    j["failures"] = r.failures;
    j["inconclusive"] = r.inconclusive;
    if (!r.domain_error.empty()) j["domain_error"] = r.domain_error;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

ordered_json carry_report(const CarryScanReport& rep, std::int64_t bits) {
    ordered_json j;
    j["config"] = {{"subcommand", "carry"}, {"k_min", rep.k_min}, {"k_max", rep.k_max}, {"bits", bits}};
    ordered_json rows = ordered_json::array();
    // Re-walk the range so each index gets its row without storing verdicts.
    WitnessIterator it(rep.k_min);
    for (std::uint64_t k = rep.k_min;; ++k) {
        bool holds = it.pow2() - it.m() - it.R() < 0;
        rows.push_back({{"k", k}, {"holds", holds}});
        if (k == rep.k_max) break;
        it.advance();
    }
    j["results"] = std::move(rows);
    j["summary"] = {
        {"passes", rep.k_max - rep.k_min + 1 - rep.violations.size()},
        {"failures", rep.violations.size()},
        {"inconclusive", 0},
        {"violations", rep.violations},
        {"zero_slack_ks", rep.zero_slack_ks},
        {"min_slack", rep.min_slack.get_str()},
        {"min_slack_k", rep.min_slack_k},
        {"exit_code", exit_code_for(rep.violations.size(), 0)},
    };
    return j;
}

std::string carry_csv(const CarryScanReport& rep) {
    std::ostringstream out;
    out << "k,holds\n";
    WitnessIterator it(rep.k_min);
    for (std::uint64_t k = rep.k_min;; ++k) {
        bool holds = it.pow2() - it.m() - it.R() < 0;
        out << k << "," << (holds ? "true" : "false") << "\n";
        if (k == rep.k_max) break;
        it.advance();
    }
    return out.str();
}

namespace {

struct GRow {
    std::uint64_t k;
    mpz_class g;
    bool has_oracle = false;
    unsigned oracle_g = 0;
    std::uint64_t oracle_limit = 0;
    bool match = true;
};

std::vector<GRow> g_rows(std::uint64_t k_max, bool with_oracle) {
    std::vector<GRow> rows;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        GRow row;
        row.k = k;
        row.g = g_of_k(k).g;
        if (with_oracle && k <= 3) {
            row.has_oracle = true;
            row.oracle_limit = k == 1 ? 50 : 100;
            row.oracle_g = brute_force_g(k, row.oracle_limit);
            row.match = row.g == row.oracle_g;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* kSignNote =
    "g(k) = 2^k + floor((3/2)^k) - 2; the variant with a minus sign before the floor term "
    "yields g(1) = -1 and g(2) = 0, contradicting the classical values g(1)=1, g(2)=4, g(3)=9, "
    "and is rejected by the brute-force oracle.";

}  // namespace

ordered_json g_report(std::uint64_t k_max, bool with_oracle) {
    ordered_json j;
    j["config"] = {{"subcommand", "g"}, {"k_max", k_max}, {"with_oracle", with_oracle}};
    j["sign_note"] = kSignNote;
    ordered_json rows = ordered_json::array();
    std::uint64_t failures = 0;
    for (const GRow& r : g_rows(k_max, with_oracle)) {
        ordered_json row = {{"k", r.k}, {"g", r.g.get_str()}};
        if (r.has_oracle) {
            row["oracle_g"] = r.oracle_g;
            row["oracle_limit"] = r.oracle_limit;
            row["match"] = r.match;
            if (!r.match) ++failures;
        }
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    j["summary"] = {
        {"passes", k_max - failures},
        {"failures", failures},
        {"inconclusive", 0},
        {"exit_code", exit_code_for(failures, 0)},
    };
    return j;
}

std::string g_csv(std::uint64_t k_max, bool with_oracle) {
    std::ostringstream out;
    out << "k,g,oracle_g,oracle_limit,match\n";
    for (const GRow& r : g_rows(k_max, with_oracle)) {
        out << r.k << "," << r.g.get_str() << ",";
        if (r.has_oracle) {
            out << r.oracle_g << "," << r.oracle_limit << "," << (r.match ? "true" : "false");
        } else {
            out << ",,";
        }
        out << "\n";
    }
    return out.str();
}

ordered_json segments_report(const StraddleReport& scan, const TransferReport& transfer,
                             std::int64_t bits) {
    ordered_json j;
    j["config"] = {{"subcommand", "segments"}, {"n_min", scan.n_min}, {"n_max", scan.n_max}, {"bits", bits}};
    ordered_json rows = ordered_json::array();
    for (const SegmentBounds& sb : scan.entries) {
        rows.push_back({
            {"n", sb.n},
            {"status", "ok"},
            {"straddles", sb.straddles},
            {"ceil_l", sb.ceil_l},
            {"floor_u", sb.floor_u},
            {"ceil_u", sb.ceil_u},
            {"t_mid", to_decimal(sb.t.midpoint(), 25)},
            {"t_width", to_decimal(sb.t.width(), 3)},
            {"u_mid", to_decimal(sb.u.midpoint(), 25)},
            {"u_width", to_decimal(sb.u.width(), 3)},
            {"l_mid", to_decimal(sb.l.midpoint(), 25)},
            {"l_width", to_decimal(sb.l.width(), 3)},
        });
    }
    for (const InconclusiveEntry& e : scan.inconclusive) {
        rows.push_back({{"n", e.n}, {"status", "inconclusive"}, {"reason", e.reason}});
    }
    j["results"] = std::move(rows);
    std::uint64_t failures = scan.straddle_hits.size() +
                             transfer.direct_failures.size() + transfer.block_failures.size() +
                             transfer.monotonicity_failures.size();
    j["summary"] = {
        {"passes", scan.entries.size() - scan.straddle_hits.size()},
        {"failures", failures},
        {"inconclusive", scan.inconclusive.size()},
        {"straddle_hits", scan.straddle_hits},
        {"ceil_equal_count", scan.ceil_equal_count},
        {"transfer",
         {{"ok", transfer.ok},
          {"jump_indices", transfer.jump_indices_in_range},
          {"direct_failures", transfer.direct_failures},
          {"block_failures", transfer.block_failures},
          {"monotonicity_failures", transfer.monotonicity_failures}}},
        {"exit_code", exit_code_for(failures, scan.inconclusive.size())},
    };
    return j;
}

std::string segments_csv(const StraddleReport& scan) {
    std::ostringstream out;
    out << "n,status,straddles,ceil_l,floor_u,ceil_u,t_mid,t_width,u_mid,u_width,l_mid,l_width\n";
    std::size_t next_entry = 0;
    std::size_t next_bad = 0;
    for (std::int64_t n = scan.n_min; n <= scan.n_max; ++n) {
        if (next_entry < scan.entries.size() && scan.entries[next_entry].n == n) {
            const SegmentBounds& sb = scan.entries[next_entry++];
            out << sb.n << ",ok," << (sb.straddles ? "true" : "false") << "," << sb.ceil_l << ","
                << sb.floor_u << "," << sb.ceil_u << "," << to_decimal(sb.t.midpoint(), 25) << ","
                << to_decimal(sb.t.width(), 3) << "," << to_decimal(sb.u.midpoint(), 25) << ","
                << to_decimal(sb.u.width(), 3) << "," << to_decimal(sb.l.midpoint(), 25) << ","
                << to_decimal(sb.l.width(), 3) << "\n";
        } else if (next_bad < scan.inconclusive.size() && scan.inconclusive[next_bad].n == n) {
            out << n << ",inconclusive,,,,,,,,,,\n";
            ++next_bad;
        }
    }
    return out.str();
}

ordered_json lemmas_report(const std::vector<LemmaReport>& reports, std::int64_t bits,
                           std::uint64_t seed) {
    ordered_json j;
    j["config"] = {{"subcommand", "lemmas"}, {"bits", bits}, {"seed", seed}};
    ordered_json rows = ordered_json::array();
    std::uint64_t failures = 0, inconclusive = 0, passes = 0;
    bool domain_errors = false;
    for (const LemmaReport& r : reports) {
        rows.push_back(lemma_json(r));
        failures += r.failures.size();
        inconclusive += r.inconclusive.size();
        passes += r.passes;
        if (!r.domain_error.empty()) domain_errors = true;
    }
    j["results"] = std::move(rows);
    j["summary"] = {
        {"passes", passes},
        {"failures", failures},
        {"inconclusive", inconclusive},
        {"domain_errors", domain_errors},
        {"exit_code", exit_code_for(failures, inconclusive)},
    };
    return j;
}

std::string lemmas_csv(const std::vector<LemmaReport>& reports) {
    std::ostringstream out;
    out << "lemma,range_lo,range_hi,checked,passes,equalities,failures,inconclusive,domain_error\n";
    for (const LemmaReport& r : reports) {
        out << lemma_name(r.id) << ",";
        if (r.range_hi >= r.range_lo) {
            out << r.range_lo << "," << r.range_hi << ",";
        } else {
            out << ",,";
        }
        out << r.sample_count << "," << r.passes << "," << r.equalities << "," << r.failures.size()
            << "," << r.inconclusive.size() << "," << csv_escape(r.domain_error) << "\n";
    }
    return out.str();
}

ordered_json figure_json(const FigureSeries& fig) {
    ordered_json j;
    j["figure"] = fig.figure_id;
    ordered_json series = ordered_json::array();
    for (const FigureSeriesData& s : fig.series) {
        series.push_back({{"name", s.name}, {"columns", s.columns}, {"rows", s.rows}});
    }
    j["series"] = std::move(series);
    j["notes"] = fig.notes;
    return j;
}

std::string figure_csv(const FigureSeries& fig) {
    // Union of the columns across series, in first-seen order.
    std::vector<std::string> cols;
    for (const FigureSeriesData& s : fig.series) {
        for (const std::string& c : s.columns) {
            bool seen = false;
            for (const std::string& have : cols) {
                if (have == c) {
                    seen = true;
                    break;
                }
            }
            if (!seen) cols.push_back(c);
        }
    }
    std::ostringstream out;
    out << "series";
    for (const std::string& c : cols) out << "," << c;
    out << "\n";
    for (const FigureSeriesData& s : fig.series) {
        for (const auto& row : s.rows) {
            out << s.name;
            for (const std::string& c : cols) {
                out << ",";
                for (std::size_t i = 0; i < s.columns.size(); ++i) {
                    if (s.columns[i] == c && i < row.size()) {
                        out << csv_escape(row[i]);
                        break;
                    }
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace waring
