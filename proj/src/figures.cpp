#include <stdexcept>

#include "waring/errors.hpp"
#include "waring/real_functions.hpp"
#include "waring/report.hpp"
#include "waring/segments.hpp"

namespace waring {

namespace {

constexpr int kMidDigits = 17;
constexpr int kWidthDigits = 3;

std::string mid_str(const Interval& v) { return to_decimal(v.midpoint(), kMidDigits); }
std::string width_str(const Interval& v) { return to_decimal(v.width(), kWidthDigits); }

// Step values f1(k) = 2^k and f2(k) = R + m (with f2(0) = 1).
void emit_steps(FigureSeries& fig, std::int64_t k_max) {
    FigureSeriesData f1{"f1", {"k", "value"}, {}};
    FigureSeriesData f2{"f2", {"k", "value"}, {}};
    mpz_class pow2 = 1;
    f1.rows.push_back({"0", "1"});
    f2.rows.push_back({"0", "1"});
    if (k_max >= 1) {
        WitnessIterator it(1);
        for (std::int64_t k = 1;; ++k) {
            pow2 <<= 1;
            f1.rows.push_back({std::to_string(k), pow2.get_str()});
            mpz_class v = it.R() + it.m();
            f2.rows.push_back({std::to_string(k), v.get_str()});
            if (k == k_max) break;
            it.advance();
        }
    }
    fig.series.push_back(std::move(f1));
    fig.series.push_back(std::move(f2));
}

// Continuous curve sampled at x = 0, step, 2*step, ..., <= x_max.
template <typename F>
FigureSeriesData sample_curve(const std::string& name, const mpq_class& x_max,
                              const mpq_class& step, F eval) {
    FigureSeriesData s{name, {"x", "mid", "width"}, {}};
    for (mpq_class x = 0; x <= x_max; x += step) {
        Interval v = eval(x);
        s.rows.push_back({format_decimal(x), mid_str(v), width_str(v)});
    }
    return s;
}

}  // namespace

FigureSeries emit_figure(int figure_id, const FigureConfig& cfg) {
    if (figure_id < 1 || figure_id > 7) throw std::domain_error("figure id must be in 1..7");
    if (!(cfg.step > 0)) throw std::domain_error("figure step must be positive");
    FigureSeries fig;
    fig.figure_id = figure_id;
    const std::int64_t bits = cfg.bits;

    switch (figure_id) {
        case 1: {
            emit_steps(fig, cfg.k_max);
            break;
        }
        case 2: {
            emit_steps(fig, cfg.k_max);
            fig.series.push_back(sample_curve("F1", cfg.x_max, cfg.step, [&](const mpq_class& x) {
                return iv_exp2(Interval::of_mpq(x, bits), bits);
            }));
            FigureSeriesData f2{"F2", {"x", "mid", "width", "segment"}, {}};
            for (mpq_class x = 0; x <= cfg.x_max; x += cfg.step) {
                try {
                    Interval xi = Interval::of_mpq(x, bits);
                    Interval v = iv_F2(xi, bits);
                    Interval a = iv_pow_3_2(xi, bits);
                    mpz_class seg = *unique_floor(a);
                    f2.rows.push_back({format_decimal(x), mid_str(v), width_str(v), seg.get_str()});
                } catch (const FloorAmbiguous&) {
                    fig.notes.push_back("skipped x=" + format_decimal(x) +
                                        ": (3/2)^x enclosure straddles an integer");
                }
            }
            fig.series.push_back(std::move(f2));
            break;
        }
        case 3: {
            fig.series.push_back(sample_curve("phi1", cfg.x_max, cfg.step, [&](const mpq_class& x) {
                return iv_pow_3_2(Interval::of_mpq(x, bits), bits);
            }));
            fig.series.push_back(sample_curve("phi2", cfg.x_max, cfg.step, [&](const mpq_class& x) {
                return iv_phi2(Interval::of_mpq(x, bits), bits);
            }));
            break;
        }
        case 4: {
            fig.series.push_back(sample_curve("f1_loose", cfg.x_max, cfg.step, [&](const mpq_class& x) {
                return iv_exp2(Interval::of_mpq(x, bits), bits);
            }));
            fig.series.push_back(sample_curve("phi2", cfg.x_max, cfg.step, [&](const mpq_class& x) {
                return iv_phi2(Interval::of_mpq(x, bits), bits);
            }));
            break;
        }
        case 5: {
            FigureSeriesData s{"u_n", {"n", "u_mid", "u_width"}, {}};
            for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
                Interval u = u_n(n, bits);
                s.rows.push_back({std::to_string(n), mid_str(u), width_str(u)});
            }
            fig.series.push_back(std::move(s));
            break;
        }
        case 6: {
            FigureSeriesData below{"x_of_t_below_1", {"t", "x_mid", "x_width"}, {}};
            FigureSeriesData above{"x_of_t_above_1", {"t", "x_mid", "x_width"}, {}};
            bool gap = false;
            for (mpq_class t = cfg.t_min; t <= cfg.t_max; t += cfg.step) {
                if (t == 1) {
                    gap = true;
                    continue;
                }
                Interval x = x_of_t(Interval::of_mpq(t, bits), bits);
                auto& target = t < 1 ? below : above;
                target.rows.push_back({format_decimal(t), mid_str(x), width_str(x)});
            }
            fig.series.push_back(std::move(below));
            fig.series.push_back(std::move(above));
            // The removable singularity: lim_{t->1} x(t) = 1/q.
            Interval limit = iv_div(Interval::of_int(1, bits), q_interval(bits), bits);
            FigureSeriesData lim{"limit_at_t_1", {"t", "x_mid", "x_width"}, {}};
            lim.rows.push_back({"1", mid_str(limit), width_str(limit)});
            fig.series.push_back(std::move(lim));
            if (gap) fig.notes.push_back("gap at t=1: x(t) undefined; limit 1/q recorded in series limit_at_t_1");
            break;
        }
        case 7: {
            FigureSeriesData s{"l_n", {"n", "l_mid", "l_width"}, {}};
            for (std::int64_t n = 2; n <= cfg.n_max; ++n) {
                Interval l = l_n(n, bits);
                s.rows.push_back({std::to_string(n), mid_str(l), width_str(l)});
            }
            fig.series.push_back(std::move(s));
            break;
        }
        default:
            break;
    }
    return fig;
}

}  // namespace waring
