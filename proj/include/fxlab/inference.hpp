#pragma once

#include <map>
#include <string>
#include <vector>

#include "fxlab/regress.hpp"
#include "fxlab/series.hpp"

namespace fxlab {

enum class Transform { Level, YoY, Log };

struct ControlSpec {
    std::string series;
    Transform transform = Transform::Level;
};

// Regression design: dependent on its own lags, the key regressor and its
// lags, plus transformed controls.
struct ArdlSpec {
    std::string dependent;
    std::string key_regressor;
    int key_regressor_lags = 1;
    int ar_order = 2;
    std::vector<ControlSpec> controls;
    bool intercept = true;
};

struct GrangerResult {
    int lag = 0;
    double f_stat = 0.0;
    double p_value = 1.0;
    int df1 = 0;
    int df2 = 0;
    long nobs_effective = 0;
};

using SeriesMap = std::map<std::string, TimeSeries>;

// Column order: constant, controls (transformed), key regressor, its lags,
// AR lags of the dependent. Rows are listwise-aligned across every column and
// the dependent. Annual series are step-expanded when mixed with quarterly.
DesignMatrix build_ardl_design(const ArdlSpec& spec, const SeriesMap& data);

OlsFit fit_ardl(const ArdlSpec& spec, const SeriesMap& data);

// Nested-model F tests of cause -> effect for each lag depth 1..max_lag.
// Restricted: effect on its own lags plus intercept; unrestricted adds the
// cause lags. Both sides of each test share the identical row set.
std::vector<GrangerResult> granger_test(const TimeSeries& cause,
                                        const TimeSeries& effect, int max_lag);

struct BatteryCountry {
    std::string name;
    std::string csv_path;
    std::string cause_column;
    std::string effect_column;
    int max_lag = 0;  // 0 = use the per-country default
};

struct BatteryEntry {
    std::string country;
    std::string cause;
    std::string effect;
    std::vector<GrangerResult> results;
    std::string error;  // nonempty when this cell failed; the battery continues
};

int default_battery_max_lag(const std::string& country);

// One Granger table per country cell; per-country failures are isolated.
std::vector<BatteryEntry> replication_battery(const std::vector<BatteryCountry>& countries);

} // namespace fxlab
