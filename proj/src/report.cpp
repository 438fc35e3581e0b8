#include "fxlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "fxlab/errors.hpp"

namespace fxlab {

namespace {

std::string fmt_fixed(double x, int decimals) {
    if (std::isnan(x)) {
        return "n/a";
    }
    if (std::isinf(x)) {
        return x > 0.0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

std::string fmt_general(double x) {
    if (std::isnan(x)) {
        return "n/a";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", x);
    return buf;
}

std::string fmt_exact(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
    if (s.size() >= width) {
        return s;
    }
    return std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    if (s.size() >= width) {
        return s;
    }
    return s + std::string(width - s.size(), ' ');
}

std::string footer_pair(const std::string& label, const std::string& value) {
    return pad_right(label, 11) + pad_left(value, 11);
}

constexpr std::size_t kStatWidth = 13;

} // namespace

std::string render_regression_table(const OlsFit& fit, const std::string& title,
                                    const std::vector<std::string>& row_order) {
    std::vector<std::size_t> rows;
    if (row_order.empty()) {
        for (std::size_t i = 0; i < fit.column_names.size(); ++i) {
            rows.push_back(i);
        }
    } else {
        for (const auto& name : row_order) {
            const auto it = std::find(fit.column_names.begin(),
                                      fit.column_names.end(), name);
            if (it == fit.column_names.end()) {
                throw DataError("regression table row '" + name +
                                "' is not a fitted term");
            }
            rows.push_back(
                static_cast<std::size_t>(it - fit.column_names.begin()));
        }
    }

    std::size_t name_width = 4;
    for (std::size_t i : rows) {
        name_width = std::max(name_width, fit.column_names[i].size());
    }
    name_width += 2;
    const std::size_t total = name_width + 4 * kStatWidth;

    std::string out;
    if (!title.empty()) {
        out += title + "\n";
    }
    out += "Dependent variable: " + fit.dependent_name + "\n";
    out += std::string(total, '=') + "\n";
    out += pad_right("Term", name_width) + pad_left("Coefficient", kStatWidth) +
           pad_left("Std. Error", kStatWidth) + pad_left("t-Statistic", kStatWidth) +
           pad_left("p-Value", kStatWidth) + "\n";
    out += std::string(total, '-') + "\n";
    for (std::size_t i : rows) {
        out += pad_right(fit.column_names[i], name_width) +
               pad_left(fmt_fixed(fit.coefficients(static_cast<Eigen::Index>(i)), 4),
                        kStatWidth) +
               pad_left(
                   fmt_fixed(fit.standard_errors(static_cast<Eigen::Index>(i)), 4),
                   kStatWidth) +
               pad_left(fmt_fixed(fit.t_stats(static_cast<Eigen::Index>(i)), 3),
                        kStatWidth) +
               pad_left(fmt_fixed(fit.p_values(static_cast<Eigen::Index>(i)), 3),
                        kStatWidth) +
               "\n";
    }
    out += std::string(total, '-') + "\n";
    const std::string obs =
        std::to_string(fit.nobs) + " (" + std::to_string(fit.df_resid) + ")";
    out += footer_pair("Obs. (Df)", obs) + "   " +
           footer_pair("R2", fmt_fixed(fit.r2, 3)) + "   " +
           footer_pair("Adj. R2", fmt_fixed(fit.adj_r2, 3)) + "\n";
    out += footer_pair("F-stat.", fmt_general(fit.f_stat)) + "   " +
           footer_pair("AIC", fmt_fixed(fit.aic, 2)) + "   " +
           footer_pair("BIC", fmt_fixed(fit.bic, 2)) + "\n";
    out += std::string(total, '=') + "\n";
    return out;
}

std::string render_granger_table(const std::vector<GrangerResult>& results,
                                 const std::string& title) {
    std::vector<GrangerResult> sorted = results;
    std::sort(sorted.begin(), sorted.end(),
              [](const GrangerResult& a, const GrangerResult& b) {
                  return a.lag < b.lag;
              });
    std::string out;
    if (!title.empty()) {
        out += title + "\n";
    }
    out += pad_left("Lag", 3) + pad_left("F-Statistic", 14) +
           pad_left("p-Value", 14) + "\n";
    for (const auto& r : sorted) {
        out += pad_left(std::to_string(r.lag), 3) +
               pad_left(fmt_fixed(r.f_stat, 4), 14) +
               pad_left(fmt_fixed(r.p_value, 4), 14) + "\n";
    }
    return out;
}

std::string render_battery_report(const std::vector<BatteryEntry>& entries) {
    std::string out;
    for (const auto& entry : entries) {
        if (!out.empty()) {
            out += "\n";
        }
        const std::string title = entry.country + ": does " + entry.cause +
                                  " drive " + entry.effect + "?";
        if (entry.error.empty()) {
            out += render_granger_table(entry.results, title);
        } else {
            out += title + "\n";
            out += "  error: " + entry.error + "\n";
        }
    }
    return out;
}

std::string render_neutral_rates(const std::vector<NeutralRateRow>& rows,
                                 double spread_threshold) {
    std::size_t label_width = 9;
    for (const auto& r : rows) {
        label_width = std::max(label_width, r.economy_a.size());
        label_width = std::max(label_width, r.economy_b.size());
    }
    label_width += 2;

    std::string out = "Capital-neutral growth comparison (threshold " +
                      fmt_fixed(spread_threshold, 6) + ")\n";
    out += pad_right("Economy A", label_width) + pad_right("Economy B", label_width) +
           pad_left("g A", 11) + pad_left("g B", 11) + pad_left("Spread", 11) +
           "   Neutrality\n";
    for (const auto& r : rows) {
        out += pad_right(r.economy_a, label_width) +
               pad_right(r.economy_b, label_width) +
               pad_left(fmt_fixed(r.g_a, 6), 11) +
               pad_left(fmt_fixed(r.g_b, 6), 11) +
               pad_left(fmt_fixed(r.spread, 6), 11) + "   " +
               (r.out_of_neutrality ? "breached" : "within") + "\n";
    }
    return out;
}

namespace {

int event_code(ScenarioEvent::Type type) {
    switch (type) {
        case ScenarioEvent::Type::CrisisDevaluation:
            return 1;
        case ScenarioEvent::Type::FinancingStress:
            return 2;
        case ScenarioEvent::Type::DebtLedger:
            return 3;
    }
    return 0;
}

std::string event_label(ScenarioEvent::Type type) {
    switch (type) {
        case ScenarioEvent::Type::CrisisDevaluation:
            return "crisis devaluation";
        case ScenarioEvent::Type::FinancingStress:
            return "financing stress";
        case ScenarioEvent::Type::DebtLedger:
            return "debt ledger";
    }
    return "event";
}

std::string period_key(const ScenarioPath& path, int t) {
    const long base = period_index(path.frequency, path.start_period);
    return format_period(path.frequency, period_from_index(path.frequency, base + t));
}

} // namespace

std::string render_trajectory_csv(const ScenarioPath& path) {
    std::string out =
        "period,rer,price_level,reserves,k,dk,g_target,g_neutral,event\n";
    for (const auto& point : path.points) {
        const double g_neutral = path.target_g - point.growth_regime.margin;
        out += period_key(path, point.period) + ",";
        out += fmt_exact(point.rer) + ",";
        out += fmt_exact(point.price_level) + ",";
        out += fmt_exact(point.reserves) + ",";
        out += fmt_exact(point.state.k) + ",";
        out += fmt_exact(point.state.dk) + ",";
        out += fmt_exact(path.target_g) + ",";
        out += fmt_exact(g_neutral) + ",";
        if (!point.events.empty()) {
            int code = 4;
            for (const auto& ev : point.events) {
                code = std::min(code, event_code(ev.type));
            }
            out += std::to_string(code);
        }
        out += "\n";
    }
    return out;
}

void write_trajectory_csv(const ScenarioPath& path, const std::string& out_path) {
    std::ofstream file(out_path);
    if (!file) {
        throw DataError("cannot write trajectory CSV: " + out_path);
    }
    file << render_trajectory_csv(path);
    if (!file) {
        throw DataError("failed writing trajectory CSV: " + out_path);
    }
}

std::string render_event_log(const ScenarioPath& path) {
    if (path.events.empty()) {
        return "no events recorded\n";
    }
    std::string out;
    for (const auto& ev : path.events) {
        out += period_key(path, ev.period) + " (period " +
               std::to_string(ev.period) + "): " + event_label(ev.type) + ": " +
               ev.note;
        if (ev.type == ScenarioEvent::Type::CrisisDevaluation) {
            out += " (rer jump x" + fmt_general(ev.jump) + ")";
        }
        out += "\n";
    }
    return out;
}

void write_event_log(const ScenarioPath& path, const std::string& out_path) {
    std::ofstream file(out_path);
    if (!file) {
        throw DataError("cannot write event log: " + out_path);
    }
    file << render_event_log(path);
    if (!file) {
        throw DataError("failed writing event log: " + out_path);
    }
}

} // namespace fxlab
