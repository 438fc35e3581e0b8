#pragma once

#include <string>
#include <vector>

#include "fxlab/inference.hpp"
#include "fxlab/regress.hpp"
#include "fxlab/scenario.hpp"

namespace fxlab {

// All renderers emit plain ASCII and are byte-deterministic for equal inputs.

// Coefficient rows (estimate and standard error at 4 decimals, t at 3,
// p at 3) followed by a two-line summary footer. row_order selects and
// orders the terms; empty means the fit's own order.
std::string render_regression_table(const OlsFit& fit, const std::string& title,
                                    const std::vector<std::string>& row_order = {});

// Lag, F-statistic and p-value (both at 4 decimals), rows in ascending lag.
std::string render_granger_table(const std::vector<GrangerResult>& results,
                                 const std::string& title);

std::string render_battery_report(const std::vector<BatteryEntry>& entries);

std::string render_neutral_rates(const std::vector<NeutralRateRow>& rows,
                                 double spread_threshold);

// One row per simulated period with columns period, rer, price_level,
// reserves, k, dk, g_target, g_neutral, event. The event column carries a
// numeric code (1 crisis, 2 financing stress, 3 debt ledger) or stays empty,
// so the file loads back through load_csv.
std::string render_trajectory_csv(const ScenarioPath& path);
void write_trajectory_csv(const ScenarioPath& path, const std::string& out_path);

// Human-readable event narration, one line per event in period order.
std::string render_event_log(const ScenarioPath& path);
void write_event_log(const ScenarioPath& path, const std::string& out_path);

} // namespace fxlab
