#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fxlab/dataset.hpp"
#include "fxlab/equilibrium.hpp"
#include "fxlab/inference.hpp"
#include "fxlab/scenario.hpp"

namespace fxlab {

// Loaders reject unknown keys and report which object and key went wrong, so
// config typos fail loudly instead of silently taking defaults.

nlohmann::json load_json_file(const std::string& path);

EconomyState economy_from_json(const nlohmann::json& j, const std::string& context);
BilsonParams bilson_from_json(const nlohmann::json& j);
PolicyRegime policy_from_json(const nlohmann::json& j);
Formulation formulation_from_string(const std::string& s);
Transform transform_from_string(const std::string& s);
Period period_from_key(const std::string& key, Frequency* frequency = nullptr);

// Regression input: a named source series plus the transform that turns it
// into the estimation variable.
struct SeriesSelector {
    std::string series;
    Transform transform = Transform::Level;
};

struct ArdlConfig {
    SeriesSelector dependent;
    SeriesSelector key_regressor;
    int key_regressor_lags = 1;
    int ar_order = 2;
    std::vector<ControlSpec> controls;
    bool intercept = true;
};

ArdlConfig ardl_config_from_json(const nlohmann::json& j);

// Applies the dependent and key transforms to dataset columns and assembles
// the series map plus the ArdlSpec referring to the transformed names.
ArdlSpec materialize_ardl(const ArdlConfig& cfg, const Dataset& data,
                          SeriesMap& series);

// CSV paths in the battery config resolve relative to base_dir.
std::vector<BatteryCountry> battery_from_json(const nlohmann::json& j,
                                              const std::string& base_dir);

struct RerConfig {
    EconomyState domestic;
    EconomyState reference;
    BilsonParams bilson;
    Formulation formulation = Formulation::PriceLevel;
    std::optional<double> observed_rer;  // adds the imbalance to the report
    std::optional<double> p_ratio;       // switches to the dollar-trade form
};

RerConfig rer_from_json(const nlohmann::json& j);

SimulationConfig simulation_from_json(const nlohmann::json& j);

struct NeutralRatesConfig {
    std::vector<EconomyState> economies;
    double spread_threshold = 0.005;
};

NeutralRatesConfig neutral_rates_from_json(const nlohmann::json& j);

} // namespace fxlab
