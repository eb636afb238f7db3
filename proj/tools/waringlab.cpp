// waringlab: certified checks of the carry inequality 2^k {(3/2)^k} + floor((3/2)^k) > 2^k,
// the comb-segment geometry behind it, and the endpoint inequalities, with
// machine-readable reports.
//
// Exit codes: 0 all checks passed, 1 certified violation found,
//             2 inconclusive entries remain at max precision, 3 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "waring/exact.hpp"
#include "waring/lemmas.hpp"
#include "waring/report.hpp"
#include "waring/segments.hpp"

namespace {

using waring::kExitUsage;
using waring::ordered_json;

struct CommonOpts {
    std::string out = "-";
    std::string format;  // per-subcommand default
    std::int64_t bits = 128;
    std::uint64_t seed = 0;
};

bool write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return false;
    }
    f << content;
    return f.good();
}

int finish(const CommonOpts& common, const ordered_json& j, const std::string& csv,
           const std::string& default_format, int exit_code) {
    std::string format = common.format.empty() ? default_format : common.format;
    std::string content = format == "csv" ? csv : j.dump(2) + "\n";
    if (!write_output(common.out, content)) return kExitUsage;
    return exit_code;
}

bool parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoll(text.substr(0, colon));
        hi = std::stoll(text.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return true;
}

void add_common(CLI::App* cmd, CommonOpts& common, const char* default_format) {
    cmd->add_option("--out", common.out, "Output path, or - for stdout");
    cmd->add_option("--format", common.format, std::string("Output format (default ") + default_format + ")")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--bits", common.bits, "Starting interval precision in bits (default 128)")
        ->check(CLI::Range(std::int64_t(32), std::int64_t(1) << 20));
    cmd->add_option("--seed", common.seed, "Seed for deterministic sampling");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified verification lab for the carry inequality, comb segments, and endpoint bounds"};
    app.require_subcommand(1);

    std::int64_t env_default_bits = 128;
    if (const char* env_bits = std::getenv("WARINGLAB_BITS")) {
        try {
            std::int64_t b = std::stoll(env_bits);
            if (b >= 32) env_default_bits = b;
        } catch (...) {
        }
    }

    // ---- carry ----
    CommonOpts carry_common;
    carry_common.bits = env_default_bits;
    std::uint64_t carry_k_min = 1, carry_k_max = 1000;
    auto* carry_cmd = app.add_subcommand("carry", "Exact scan of the carry inequality over k");
    carry_cmd->add_option("--k-min", carry_k_min, "First k (default 1)")->check(CLI::PositiveNumber);
    carry_cmd->add_option("--k-max", carry_k_max, "Last k")->required()->check(CLI::PositiveNumber);
    add_common(carry_cmd, carry_common, "json");

    // ---- g ----
    CommonOpts g_common;
    g_common.bits = env_default_bits;
    std::uint64_t g_k_max = 10;
    bool g_with_oracle = true;
    auto* g_cmd = app.add_subcommand("g", "g(k) = 2^k + floor((3/2)^k) - 2, with brute-force oracle cross-check");
    g_cmd->add_option("--k-max", g_k_max, "Compute g(k) for k=1..k_max (default 10)")->check(CLI::PositiveNumber);
    g_cmd->add_flag("--with-oracle,!--no-oracle", g_with_oracle,
                    "Cross-check k<=3 against the dynamic-programming oracle (default on)");
    add_common(g_cmd, g_common, "json");

    // ---- segments ----
    CommonOpts seg_common;
    seg_common.bits = env_default_bits;
    std::int64_t seg_n_min = 2, seg_n_max = 100;
    auto* seg_cmd = app.add_subcommand("segments", "Certified straddle scan and monotonicity transfer over n");
    seg_cmd->add_option("--n-min", seg_n_min, "First n (default 2)");
    seg_cmd->add_option("--n-max", seg_n_max, "Last n")->required();
    add_common(seg_cmd, seg_common, "json");

    // ---- lemmas ----
    CommonOpts lem_common;
    lem_common.bits = env_default_bits;
    std::string lem_which = "all";
    std::string lem_range;
    std::uint64_t lem_samples = 1000;
    bool lem_invert_mr = false;
    auto* lem_cmd = app.add_subcommand("lemmas", "Range-parameterized verifiers for the lemma suite");
    lem_cmd->add_option("--which", lem_which,
                        "Lemma to run: all, lemma1, ceil_transfer, basic_bound, binomial_q, "
                        "upper_endpoint, lower_endpoint, mr_bound, x_prime_positive, h_increasing");
    lem_cmd->add_option("--range", lem_range, "Index range lo:hi for the named range-based lemma");
    lem_cmd->add_option("--samples", lem_samples, "Sample count for sampled lemmas (default 1000)");
    lem_cmd->add_flag("--invert-mr-bound", lem_invert_mr)->group("");  // test hook, hidden
    add_common(lem_cmd, lem_common, "json");

    // ---- figures ----
    CommonOpts fig_common;
    fig_common.bits = env_default_bits;
    int fig_which = 1;
    std::int64_t fig_k_max = 10;
    std::int64_t fig_n_max = 20;
    std::string fig_x_max = "10", fig_step = "0.01", fig_t_min = "0.1", fig_t_max = "3";
    auto* fig_cmd = app.add_subcommand("figures", "Data series for the seven figures");
    fig_cmd->add_option("--which", fig_which, "Figure id 1..7")->required()->check(CLI::Range(1, 7));
    fig_cmd->add_option("--k-max", fig_k_max, "Step-function range for figures 1-2 (default 10)");
    fig_cmd->add_option("--n-max", fig_n_max, "Index range for figures 5 and 7 (default 20)");
    fig_cmd->add_option("--x-max", fig_x_max, "Continuous range for figures 2-4 (default 10)");
    fig_cmd->add_option("--step", fig_step, "Sampling step (default 0.01)");
    fig_cmd->add_option("--t-min", fig_t_min, "Figure 6 lower t (default 0.1)");
    fig_cmd->add_option("--t-max", fig_t_max, "Figure 6 upper t (default 3)");
    add_common(fig_cmd, fig_common, "csv");

    // ---- report ----
    CommonOpts rep_common;
    rep_common.bits = env_default_bits;
    std::uint64_t rep_carry_k_max = 1000;
    std::int64_t rep_seg_n_max = 100;
    auto* rep_cmd = app.add_subcommand("report", "Combined desk-scale verification report");
    rep_cmd->add_option("--carry-k-max", rep_carry_k_max, "Carry scan bound (default 1000)");
    rep_cmd->add_option("--segments-n-max", rep_seg_n_max, "Straddle scan bound (default 100)");
    add_common(rep_cmd, rep_common, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (carry_cmd->parsed()) {
            if (carry_k_min > carry_k_max) {
                std::cerr << "error: --k-min must not exceed --k-max\n";
                return kExitUsage;
            }
            waring::CarryScanReport rep = waring::scan_carry(carry_k_min, carry_k_max);
            ordered_json j = waring::carry_report(rep, carry_common.bits);
            return finish(carry_common, j, waring::carry_csv(rep), "json",
                          j["summary"]["exit_code"].get<int>());
        }

        if (g_cmd->parsed()) {
            ordered_json j = waring::g_report(g_k_max, g_with_oracle);
            return finish(g_common, j, waring::g_csv(g_k_max, g_with_oracle), "json",
                          j["summary"]["exit_code"].get<int>());
        }

        if (seg_cmd->parsed()) {
            if (seg_n_min < 2 || seg_n_min > seg_n_max) {
                std::cerr << "error: segments requires 2 <= n-min <= n-max\n";
                return kExitUsage;
            }
            waring::StraddleReport scan = waring::straddle_scan(seg_n_min, seg_n_max, seg_common.bits);
            waring::TransferReport transfer = waring::monotonicity_transfer_check(scan);
            ordered_json j = waring::segments_report(scan, transfer, seg_common.bits);
            return finish(seg_common, j, waring::segments_csv(scan), "json",
                          j["summary"]["exit_code"].get<int>());
        }

        if (lem_cmd->parsed()) {
            waring::SuiteConfig cfg;
            cfg.bits = lem_common.bits;
            cfg.seed = lem_common.seed;
            cfg.invert_mr_bound = lem_invert_mr;
            std::vector<waring::LemmaReport> reports;
            if (lem_which == "all") {
                // Desk-scale defaults for the combined run.
                cfg.lemma1_hi = 1000;
                cfg.upper_hi = 1000;
                cfg.mr_hi = 1000;
                cfg.lower_hi = 200;
                cfg.basic_hi = 100;
                cfg.ceil_hi = 50;
                cfg.binomial_samples = lem_samples;
                cfg.h_samples = lem_samples;
                cfg.xprime_samples = lem_samples;
                reports = waring::verify_all(cfg);
            } else {
                auto id = waring::lemma_from_name(lem_which);
                if (!id) {
                    std::cerr << "error: unknown lemma name " << lem_which << "\n";
                    return kExitUsage;
                }
                std::int64_t lo = 2, hi = 100;
                if (!lem_range.empty() && !parse_range(lem_range, lo, hi)) {
                    std::cerr << "error: --range must be lo:hi\n";
                    return kExitUsage;
                }
                std::int64_t min_lo = *id == waring::LemmaId::MRBound ? 3 : 2;
                bool is_range_based = *id != waring::LemmaId::BinomialQ &&
                                      *id != waring::LemmaId::XPrimePositive &&
                                      *id != waring::LemmaId::HIncreasing;
                if (is_range_based) {
                    if (lem_range.empty()) hi = *id == waring::LemmaId::MRBound ? 1000 : 100;
                    if (lem_range.empty() && *id == waring::LemmaId::MRBound) lo = 3;
                    if (lo < min_lo || lo > hi) {
                        std::cerr << "error: " << lem_which << " requires " << min_lo
                                  << " <= lo <= hi (got " << lo << ":" << hi << ")\n";
                        return kExitUsage;
                    }
                }
                switch (*id) {
                    case waring::LemmaId::Lemma1:
                        reports.push_back(waring::verify_lemma1(lo, hi));
                        break;
                    case waring::LemmaId::CeilTransfer:
                        reports.push_back(waring::verify_ceil_transfer_range(lo, hi, cfg.bits));
                        break;
                    case waring::LemmaId::BasicBound:
                        reports.push_back(waring::verify_basic_bound(lo, hi, cfg.bits));
                        break;
                    case waring::LemmaId::BinomialQ:
                        reports.push_back(waring::verify_binomial_q(lem_samples, cfg.seed, cfg.bits));
                        break;
                    case waring::LemmaId::UpperEndpoint:
                        reports.push_back(waring::verify_upper_endpoint(lo, hi));
                        break;
                    case waring::LemmaId::LowerEndpoint:
                        reports.push_back(waring::verify_lower_endpoint(lo, hi, cfg.bits));
                        break;
                    case waring::LemmaId::MRBound:
                        reports.push_back(waring::verify_mr_bound(lo, hi, lem_invert_mr));
                        break;
                    case waring::LemmaId::XPrimePositive:
                        reports.push_back(waring::verify_x_prime_positive(lem_samples, cfg.seed, cfg.bits));
                        break;
                    case waring::LemmaId::HIncreasing:
                        reports.push_back(waring::verify_H_increasing(lem_samples, cfg.seed, cfg.bits));
                        break;
                }
            }
            ordered_json j = waring::lemmas_report(reports, cfg.bits, cfg.seed);
            return finish(lem_common, j, waring::lemmas_csv(reports), "json",
                          j["summary"]["exit_code"].get<int>());
        }

        if (fig_cmd->parsed()) {
            waring::FigureConfig cfg;
            cfg.bits = fig_common.bits;
            cfg.k_max = fig_k_max;
            cfg.n_max = fig_n_max;
            cfg.x_max = waring::parse_decimal(fig_x_max);
            cfg.step = waring::parse_decimal(fig_step);
            cfg.t_min = waring::parse_decimal(fig_t_min);
            cfg.t_max = waring::parse_decimal(fig_t_max);
            waring::FigureSeries fig = waring::emit_figure(fig_which, cfg);
            ordered_json j = waring::figure_json(fig);
            return finish(fig_common, j, waring::figure_csv(fig), "csv", 0);
        }

        if (rep_cmd->parsed()) {
            waring::CarryScanReport carry = waring::scan_carry(1, rep_carry_k_max);
            waring::StraddleReport scan = waring::straddle_scan(2, rep_seg_n_max, rep_common.bits);
            waring::TransferReport transfer = waring::monotonicity_transfer_check(scan);
            waring::SuiteConfig lcfg;
            lcfg.bits = rep_common.bits;
            lcfg.seed = rep_common.seed;
            lcfg.lemma1_hi = 1000;
            lcfg.upper_hi = 1000;
            lcfg.mr_hi = 1000;
            lcfg.lower_hi = 200;
            lcfg.basic_hi = 100;
            lcfg.ceil_hi = 50;
            lcfg.binomial_samples = 500;
            lcfg.h_samples = 200;
            lcfg.xprime_samples = 200;
            std::vector<waring::LemmaReport> lemmas = waring::verify_all(lcfg);

            ordered_json j;
            j["config"] = {{"subcommand", "report"},
                           {"carry_k_max", rep_carry_k_max},
                           {"segments_n_max", rep_seg_n_max},
                           {"bits", rep_common.bits},
                           {"seed", rep_common.seed}};
            j["carry"] = waring::carry_report(carry, rep_common.bits);
            j["g"] = waring::g_report(10, true);
            j["segments"] = waring::segments_report(scan, transfer, rep_common.bits);
            j["lemmas"] = waring::lemmas_report(lemmas, lcfg.bits, lcfg.seed);
            std::uint64_t failures = 0, inconclusive = 0;
            for (const char* part : {"carry", "g", "segments", "lemmas"}) {
                failures += j[part]["summary"]["failures"].get<std::uint64_t>();
                inconclusive += j[part]["summary"]["inconclusive"].get<std::uint64_t>();
            }
            j["summary"] = {{"failures", failures},
                            {"inconclusive", inconclusive},
                            {"exit_code", waring::exit_code_for(failures, inconclusive)}};
            return finish(rep_common, j, j.dump(2) + "\n", "json",
                          j["summary"]["exit_code"].get<int>());
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
