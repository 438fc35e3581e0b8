#include "fxlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>

#include "fxlab/errors.hpp"

namespace fxlab {

namespace {

using nlohmann::json;

void expect_object(const json& j, const std::string& context) {
    if (!j.is_object()) {
        throw DataError(context + " must be a JSON object");
    }
}

void expect_keys(const json& j, const std::string& context,
                 std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return item.key() == k; });
        if (!known) {
            throw DataError(context + ": unknown key '" + item.key() + "'");
        }
    }
}

double require_number(const json& j, const std::string& context, const char* key) {
    if (!j.contains(key)) {
        throw DataError(context + ": missing required key '" + std::string(key) + "'");
    }
    if (!j.at(key).is_number()) {
        throw DataError(context + ": key '" + std::string(key) + "' must be a number");
    }
    return j.at(key).get<double>();
}

double number_or(const json& j, const std::string& context, const char* key,
                 double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw DataError(context + ": key '" + std::string(key) + "' must be a number");
    }
    return j.at(key).get<double>();
}

int int_or(const json& j, const std::string& context, const char* key, int fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number_integer()) {
        throw DataError(context + ": key '" + std::string(key) +
                        "' must be an integer");
    }
    return j.at(key).get<int>();
}

int require_int(const json& j, const std::string& context, const char* key) {
    if (!j.contains(key)) {
        throw DataError(context + ": missing required key '" + std::string(key) + "'");
    }
    if (!j.at(key).is_number_integer()) {
        throw DataError(context + ": key '" + std::string(key) +
                        "' must be an integer");
    }
    return j.at(key).get<int>();
}

bool bool_or(const json& j, const std::string& context, const char* key,
             bool fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_boolean()) {
        throw DataError(context + ": key '" + std::string(key) + "' must be a boolean");
    }
    return j.at(key).get<bool>();
}

std::string string_or(const json& j, const std::string& context, const char* key,
                      const std::string& fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_string()) {
        throw DataError(context + ": key '" + std::string(key) + "' must be a string");
    }
    return j.at(key).get<std::string>();
}

std::string require_string(const json& j, const std::string& context,
                           const char* key) {
    if (!j.contains(key)) {
        throw DataError(context + ": missing required key '" + std::string(key) + "'");
    }
    if (!j.at(key).is_string()) {
        throw DataError(context + ": key '" + std::string(key) + "' must be a string");
    }
    return j.at(key).get<std::string>();
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool all_digits(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw DataError("cannot open config file: " + path);
    }
    try {
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw DataError("config " + path + ": " + e.what());
    }
}

EconomyState economy_from_json(const nlohmann::json& j, const std::string& context) {
    expect_object(j, context);
    expect_keys(j, context,
                {"label", "g_y", "k", "dk", "alpha", "i", "Y", "P", "M", "n"});
    EconomyState e;
    e.label = string_or(j, context, "label", e.label);
    e.g_y = number_or(j, context, "g_y", e.g_y);
    e.k = number_or(j, context, "k", e.k);
    e.dk = number_or(j, context, "dk", e.dk);
    e.alpha = number_or(j, context, "alpha", e.alpha);
    e.i = number_or(j, context, "i", e.i);
    e.Y = number_or(j, context, "Y", e.Y);
    e.P = number_or(j, context, "P", e.P);
    e.M = number_or(j, context, "M", e.M);
    e.n = number_or(j, context, "n", e.n);
    return e;
}

BilsonParams bilson_from_json(const nlohmann::json& j) {
    const std::string context = "bilson";
    expect_object(j, context);
    expect_keys(j, context, {"psi0", "psi1", "epsilon", "c0", "lambda", "eta", "t"});
    BilsonParams b;
    b.psi0 = number_or(j, context, "psi0", b.psi0);
    b.psi1 = number_or(j, context, "psi1", b.psi1);
    b.epsilon = number_or(j, context, "epsilon", b.psi1);
    b.c0 = number_or(j, context, "c0", b.c0);
    b.lambda = number_or(j, context, "lambda", b.lambda);
    b.eta = number_or(j, context, "eta", b.eta);
    b.t = number_or(j, context, "t", b.t);
    return b;
}

PolicyRegime policy_from_json(const nlohmann::json& j) {
    const std::string context = "policy";
    expect_object(j, context);
    expect_keys(j, context,
                {"kind", "vent_share", "reserves", "drain_coefficient",
                 "reserve_scale", "post_crisis_vent_share"});
    PolicyRegime p;
    const std::string kind = lower(string_or(j, context, "kind", "floating"));
    if (kind == "floating") {
        p.kind = PolicyRegime::Kind::Floating;
    } else if (kind == "pegged") {
        p.kind = PolicyRegime::Kind::Pegged;
    } else {
        throw DataError("policy: kind must be 'floating' or 'pegged', got '" + kind +
                        "'");
    }
    p.vent_share = number_or(j, context, "vent_share", p.vent_share);
    p.reserves = number_or(j, context, "reserves", p.reserves);
    p.drain_coefficient =
        number_or(j, context, "drain_coefficient", p.drain_coefficient);
    p.reserve_scale = number_or(j, context, "reserve_scale", p.reserves);
    p.post_crisis_vent_share =
        number_or(j, context, "post_crisis_vent_share", p.post_crisis_vent_share);
    return p;
}

Formulation formulation_from_string(const std::string& s) {
    const std::string v = lower(s);
    if (v == "price" || v == "price_level") {
        return Formulation::PriceLevel;
    }
    if (v == "monetary") {
        return Formulation::Monetary;
    }
    throw DataError("formulation must be 'price' or 'monetary', got '" + s + "'");
}

Transform transform_from_string(const std::string& s) {
    const std::string v = lower(s);
    if (v == "level") {
        return Transform::Level;
    }
    if (v == "yoy") {
        return Transform::YoY;
    }
    if (v == "log") {
        return Transform::Log;
    }
    throw DataError("transform must be 'level', 'yoy' or 'log', got '" + s + "'");
}

Period period_from_key(const std::string& key, Frequency* frequency) {
    const std::size_t q = key.find("-Q");
    if (q != std::string::npos) {
        const std::string year_part = key.substr(0, q);
        const std::string sub_part = key.substr(q + 2);
        if (!all_digits(year_part) || sub_part.size() != 1 || sub_part[0] < '1' ||
            sub_part[0] > '4') {
            throw DataError("malformed period key '" + key + "'");
        }
        if (frequency) {
            *frequency = Frequency::Quarterly;
        }
        return Period{std::stoi(year_part), sub_part[0] - '0'};
    }
    if (!all_digits(key)) {
        throw DataError("malformed period key '" + key + "'");
    }
    if (frequency) {
        *frequency = Frequency::Annual;
    }
    return Period{std::stoi(key), 1};
}

namespace {

SeriesSelector selector_from_json(const json& j, const std::string& context) {
    SeriesSelector sel;
    if (j.is_string()) {
        sel.series = j.get<std::string>();
        return sel;
    }
    expect_object(j, context);
    expect_keys(j, context, {"series", "transform"});
    sel.series = require_string(j, context, "series");
    sel.transform =
        transform_from_string(string_or(j, context, "transform", "level"));
    return sel;
}

} // namespace

ArdlConfig ardl_config_from_json(const nlohmann::json& j) {
    const std::string context = "ardl";
    expect_object(j, context);
    expect_keys(j, context,
                {"dependent", "key_regressor", "key_regressor_lags", "ar_order",
                 "controls", "intercept"});
    if (!j.contains("dependent") || !j.contains("key_regressor")) {
        throw DataError("ardl: 'dependent' and 'key_regressor' are required");
    }
    ArdlConfig cfg;
    cfg.dependent = selector_from_json(j.at("dependent"), "ardl.dependent");
    cfg.key_regressor =
        selector_from_json(j.at("key_regressor"), "ardl.key_regressor");
    cfg.key_regressor_lags =
        int_or(j, context, "key_regressor_lags", cfg.key_regressor_lags);
    cfg.ar_order = int_or(j, context, "ar_order", cfg.ar_order);
    cfg.intercept = bool_or(j, context, "intercept", cfg.intercept);
    if (j.contains("controls")) {
        if (!j.at("controls").is_array()) {
            throw DataError("ardl: 'controls' must be an array");
        }
        for (const auto& c : j.at("controls")) {
            const SeriesSelector sel = selector_from_json(c, "ardl.controls[]");
            cfg.controls.push_back(ControlSpec{sel.series, sel.transform});
        }
    }
    return cfg;
}

namespace {

std::string insert_transformed(const SeriesSelector& sel, const Dataset& data,
                               SeriesMap& series) {
    const TimeSeries& source = data.column(sel.series);
    TimeSeries out = [&]() {
        switch (sel.transform) {
            case Transform::Level:
                return source;
            case Transform::YoY:
                return pct_change_yoy(source);
            case Transform::Log:
                return natural_log(source);
        }
        throw DataError("unknown transform");
    }();
    series.emplace(out.name(), out);
    return out.name();
}

} // namespace

ArdlSpec materialize_ardl(const ArdlConfig& cfg, const Dataset& data,
                          SeriesMap& series) {
    ArdlSpec spec;
    spec.dependent = insert_transformed(cfg.dependent, data, series);
    spec.key_regressor = insert_transformed(cfg.key_regressor, data, series);
    spec.key_regressor_lags = cfg.key_regressor_lags;
    spec.ar_order = cfg.ar_order;
    spec.intercept = cfg.intercept;
    spec.controls = cfg.controls;
    for (const auto& c : cfg.controls) {
        const TimeSeries& source = data.column(c.series);
        series.emplace(source.name(), source);
    }
    return spec;
}

std::vector<BatteryCountry> battery_from_json(const nlohmann::json& j,
                                              const std::string& base_dir) {
    const std::string context = "battery";
    expect_object(j, context);
    expect_keys(j, context, {"countries"});
    if (!j.contains("countries") || !j.at("countries").is_array()) {
        throw DataError("battery: 'countries' must be an array");
    }
    std::vector<BatteryCountry> out;
    for (const auto& cj : j.at("countries")) {
        const std::string cctx = "battery.countries[]";
        expect_object(cj, cctx);
        expect_keys(cj, cctx, {"name", "csv", "cause", "effect", "max_lag"});
        BatteryCountry c;
        c.name = require_string(cj, cctx, "name");
        c.csv_path = require_string(cj, cctx, "csv");
        if (!base_dir.empty() && !c.csv_path.empty() && c.csv_path.front() != '/') {
            c.csv_path = base_dir + "/" + c.csv_path;
        }
        c.cause_column = require_string(cj, cctx, "cause");
        c.effect_column = require_string(cj, cctx, "effect");
        c.max_lag = int_or(cj, cctx, "max_lag", 0);
        out.push_back(std::move(c));
    }
    return out;
}

RerConfig rer_from_json(const nlohmann::json& j) {
    const std::string context = "rer";
    expect_object(j, context);
    expect_keys(j, context,
                {"domestic", "reference", "bilson", "formulation", "observed_rer",
                 "p_ratio"});
    if (!j.contains("domestic") || !j.contains("reference")) {
        throw DataError("rer: 'domestic' and 'reference' are required");
    }
    RerConfig cfg;
    cfg.domestic = economy_from_json(j.at("domestic"), "rer.domestic");
    cfg.reference = economy_from_json(j.at("reference"), "rer.reference");
    if (j.contains("bilson")) {
        cfg.bilson = bilson_from_json(j.at("bilson"));
    }
    cfg.formulation =
        formulation_from_string(string_or(j, context, "formulation", "price"));
    if (j.contains("observed_rer")) {
        cfg.observed_rer = require_number(j, context, "observed_rer");
    }
    if (j.contains("p_ratio")) {
        cfg.p_ratio = require_number(j, context, "p_ratio");
    }
    return cfg;
}

SimulationConfig simulation_from_json(const nlohmann::json& j) {
    const std::string context = "simulate";
    expect_object(j, context);
    expect_keys(j, context,
                {"initial", "reference", "reference_path", "reference_accumulates",
                 "policy", "bilson", "formulation", "target_g", "horizon",
                 "initial_rer", "neutrality_tol", "debt", "dk_floor", "seed",
                 "reference_noise_sigma", "start_period"});
    if (!j.contains("initial") || !j.contains("reference")) {
        throw DataError("simulate: 'initial' and 'reference' are required");
    }
    SimulationConfig cfg;
    cfg.initial = economy_from_json(j.at("initial"), "simulate.initial");
    cfg.reference = economy_from_json(j.at("reference"), "simulate.reference");
    if (j.contains("reference_path")) {
        if (!j.at("reference_path").is_array()) {
            throw DataError("simulate: 'reference_path' must be an array");
        }
        for (const auto& rj : j.at("reference_path")) {
            cfg.reference_path.push_back(
                economy_from_json(rj, "simulate.reference_path[]"));
        }
    }
    cfg.reference_accumulates =
        bool_or(j, context, "reference_accumulates", cfg.reference_accumulates);
    if (j.contains("policy")) {
        cfg.policy = policy_from_json(j.at("policy"));
    }
    if (j.contains("bilson")) {
        cfg.bilson = bilson_from_json(j.at("bilson"));
    }
    cfg.formulation =
        formulation_from_string(string_or(j, context, "formulation", "price"));
    cfg.target_g = require_number(j, context, "target_g");
    cfg.horizon = require_int(j, context, "horizon");
    cfg.initial_rer = number_or(j, context, "initial_rer", cfg.initial_rer);
    cfg.neutrality_tol = number_or(j, context, "neutrality_tol", cfg.neutrality_tol);
    if (j.contains("debt")) {
        const json& dj = j.at("debt");
        const std::string dctx = "simulate.debt";
        expect_object(dj, dctx);
        expect_keys(dj, dctx, {"source", "amount", "service", "at_period"});
        DebtFinancing debt;
        const std::string source = lower(string_or(dj, dctx, "source", "international"));
        if (source == "domestic") {
            debt.source = DebtFinancing::Source::Domestic;
        } else if (source == "international") {
            debt.source = DebtFinancing::Source::International;
        } else {
            throw DataError(
                "simulate.debt: source must be 'domestic' or 'international'");
        }
        debt.amount = require_number(dj, dctx, "amount");
        if (dj.contains("service")) {
            if (!dj.at("service").is_array()) {
                throw DataError("simulate.debt: 'service' must be an array of numbers");
            }
            for (const auto& s : dj.at("service")) {
                if (!s.is_number()) {
                    throw DataError(
                        "simulate.debt: 'service' must be an array of numbers");
                }
                debt.service.push_back(s.get<double>());
            }
        }
        debt.at_period = int_or(dj, dctx, "at_period", 0);
        cfg.debt = std::move(debt);
    }
    cfg.dk_floor = number_or(j, context, "dk_floor", cfg.dk_floor);
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer() || j.at("seed").get<double>() < 0) {
            throw DataError("simulate: 'seed' must be a nonnegative integer");
        }
        cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    cfg.reference_noise_sigma =
        number_or(j, context, "reference_noise_sigma", cfg.reference_noise_sigma);
    const std::string start =
        string_or(j, context, "start_period", "2000-Q1");
    cfg.start_period = period_from_key(start, &cfg.frequency);
    return cfg;
}

NeutralRatesConfig neutral_rates_from_json(const nlohmann::json& j) {
    const std::string context = "neutral_rates";
    expect_object(j, context);
    expect_keys(j, context, {"economies", "spread_threshold"});
    if (!j.contains("economies") || !j.at("economies").is_array()) {
        throw DataError("neutral_rates: 'economies' must be an array");
    }
    NeutralRatesConfig cfg;
    for (const auto& ej : j.at("economies")) {
        cfg.economies.push_back(economy_from_json(ej, "neutral_rates.economies[]"));
    }
    cfg.spread_threshold =
        number_or(j, context, "spread_threshold", cfg.spread_threshold);
    return cfg;
}

} // namespace fxlab
