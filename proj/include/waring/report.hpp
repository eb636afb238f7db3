#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "waring/exact.hpp"
#include "waring/lemmas.hpp"
#include "waring/segments.hpp"

namespace waring {

using ordered_json = nlohmann::ordered_json;

// Exit-code contract: 0 all checks passed, 1 at least one certified
// violation, 2 inconclusive entries remain, 3 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

int exit_code_for(std::uint64_t failures, std::uint64_t inconclusive);

// Parse a plain decimal literal ("0.01", "2", "-1.5") into an exact rational.
mpq_class parse_decimal(const std::string& text);
// Exact finite decimal rendering; requires the denominator to be of the
// form 2^a 5^b (true for anything built from parse_decimal).
std::string format_decimal(const mpq_class& value);

ordered_json carry_report(const CarryScanReport& rep, std::int64_t bits);
std::string carry_csv(const CarryScanReport& rep);

ordered_json g_report(std::uint64_t k_max, bool with_oracle);
std::string g_csv(std::uint64_t k_max, bool with_oracle);

ordered_json segments_report(const StraddleReport& scan, const TransferReport& transfer,
                             std::int64_t bits);
std::string segments_csv(const StraddleReport& scan);

ordered_json lemmas_report(const std::vector<LemmaReport>& reports, std::int64_t bits,
                           std::uint64_t seed);
std::string lemmas_csv(const std::vector<LemmaReport>& reports);

// One named data series of a figure; rows are preformatted deterministic
// strings so emission is byte-stable across runs.
struct FigureSeriesData {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct FigureSeries {
    int figure_id = 0;
    std::vector<FigureSeriesData> series;
    std::vector<std::string> notes;  // gaps, skipped points, limit values
};

struct FigureConfig {
    std::int64_t bits = 128;
    std::int64_t k_max = 10;            // figures 1-2, step functions
    mpq_class x_max = 10;               // figures 2-4, continuous curves
    mpq_class step = mpq_class(1, 100); // sampling increment
    std::int64_t n_max = 20;            // figures 5 and 7
    mpq_class t_min = mpq_class(1, 10); // figure 6
    mpq_class t_max = 3;
};

FigureSeries emit_figure(int figure_id, const FigureConfig& config);
ordered_json figure_json(const FigureSeries& fig);
std::string figure_csv(const FigureSeries& fig);

}  // namespace waring
