#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <string>

#include "fxlab/config.hpp"
#include "fxlab/errors.hpp"
#include "test_support.hpp"

using namespace fxlab;
using nlohmann::json;

TEST_SUITE("config") {

TEST_CASE("economy loader fills defaults and rejects typos") {
    const json full = json::parse(R"({
        "label": "india", "g_y": 0.05, "k": 12.0, "dk": 0.8, "alpha": 0.35,
        "i": 0.06, "Y": 4.0, "P": 1.1, "M": 2.0, "n": 1.4
    })");
    const EconomyState e = economy_from_json(full, "test");
    CHECK(e.label == "india");
    CHECK(e.g_y == 0.05);
    CHECK(e.alpha == 0.35);
    CHECK(e.n == 1.4);

    const EconomyState d = economy_from_json(json::object(), "test");
    CHECK(d.k == 1.0);
    CHECK(d.P == 1.0);
    CHECK(d.alpha == 0.3);

    CHECK_THROWS_WITH_AS(
        economy_from_json(json::parse(R"({"alpa": 0.3})"), "side"),
        doctest::Contains("side: unknown key 'alpa'"), DataError);
    CHECK_THROWS_WITH_AS(economy_from_json(json::parse(R"({"k": "big"})"), "side"),
                         doctest::Contains("must be a number"), DataError);
    CHECK_THROWS_AS(economy_from_json(json::array(), "side"), DataError);
}

TEST_CASE("money demand parameters mirror psi1 into epsilon") {
    const BilsonParams d = bilson_from_json(json::parse(R"({"psi1": 0.07})"));
    CHECK(d.psi1 == 0.07);
    CHECK(d.epsilon == 0.07);
    CHECK(d.eta == 1.0);

    const BilsonParams own =
        bilson_from_json(json::parse(R"({"psi1": 0.07, "epsilon": 0.02})"));
    CHECK(own.epsilon == 0.02);

    CHECK_THROWS_WITH_AS(bilson_from_json(json::parse(R"({"psi2": 1})")),
                         doctest::Contains("unknown key 'psi2'"), DataError);
}

TEST_CASE("policy loader defaults the drain unit to the opening reserves") {
    const PolicyRegime p = policy_from_json(json::parse(
        R"({"kind": "Pegged", "reserves": 80.0, "drain_coefficient": 0.2})"));
    CHECK(p.kind == PolicyRegime::Kind::Pegged);
    CHECK(p.reserves == 80.0);
    CHECK(p.reserve_scale == 80.0);
    CHECK(p.post_crisis_vent_share == 0.5);

    const PolicyRegime scaled = policy_from_json(
        json::parse(R"({"kind": "pegged", "reserves": 80.0, "reserve_scale": 50.0})"));
    CHECK(scaled.reserve_scale == 50.0);

    const PolicyRegime f = policy_from_json(json::object());
    CHECK(f.kind == PolicyRegime::Kind::Floating);
    CHECK(f.vent_share == 0.5);

    CHECK_THROWS_WITH_AS(policy_from_json(json::parse(R"({"kind": "crawling"})")),
                         doctest::Contains("'floating' or 'pegged'"), DataError);
}

TEST_CASE("enumeration parsers") {
    CHECK(formulation_from_string("price") == Formulation::PriceLevel);
    CHECK(formulation_from_string("PRICE_LEVEL") == Formulation::PriceLevel);
    CHECK(formulation_from_string("Monetary") == Formulation::Monetary);
    CHECK_THROWS_AS(formulation_from_string("ppp"), DataError);

    CHECK(transform_from_string("level") == Transform::Level);
    CHECK(transform_from_string("YoY") == Transform::YoY);
    CHECK(transform_from_string("LOG") == Transform::Log);
    CHECK_THROWS_AS(transform_from_string("diff"), DataError);
}

TEST_CASE("period keys parse with their frequency") {
    Frequency f = Frequency::Annual;
    CHECK(period_from_key("1999-Q3", &f) == Period{1999, 3});
    CHECK(f == Frequency::Quarterly);
    CHECK(period_from_key("2005", &f) == Period{2005, 1});
    CHECK(f == Frequency::Annual);
    CHECK(period_from_key("2010-Q1") == Period{2010, 1});
    CHECK_THROWS_AS(period_from_key("1999-Q5"), DataError);
    CHECK_THROWS_AS(period_from_key("19x9"), DataError);
    CHECK_THROWS_AS(period_from_key(""), DataError);
}

TEST_CASE("regression config accepts string and object selectors") {
    const ArdlConfig cfg = ardl_config_from_json(json::parse(R"({
        "dependent": "IN10Y",
        "key_regressor": {"series": "TB3M", "transform": "level"},
        "key_regressor_lags": 2,
        "ar_order": 3,
        "intercept": false,
        "controls": [
            "NIFTY",
            {"series": "CPI", "transform": "yoy"},
            {"series": "INRUSD", "transform": "log"}
        ]
    })"));
    CHECK(cfg.dependent.series == "IN10Y");
    CHECK(cfg.dependent.transform == Transform::Level);
    CHECK(cfg.key_regressor.series == "TB3M");
    CHECK(cfg.key_regressor_lags == 2);
    CHECK(cfg.ar_order == 3);
    CHECK(!cfg.intercept);
    REQUIRE(cfg.controls.size() == 3);
    CHECK(cfg.controls[0].series == "NIFTY");
    CHECK(cfg.controls[0].transform == Transform::Level);
    CHECK(cfg.controls[1].transform == Transform::YoY);
    CHECK(cfg.controls[2].transform == Transform::Log);

    const ArdlConfig defaults = ardl_config_from_json(
        json::parse(R"({"dependent": "y", "key_regressor": "x"})"));
    CHECK(defaults.key_regressor_lags == 1);
    CHECK(defaults.ar_order == 2);
    CHECK(defaults.intercept);
    CHECK(defaults.controls.empty());

    CHECK_THROWS_WITH_AS(ardl_config_from_json(json::parse(R"({"dependent": "y"})")),
                         doctest::Contains("required"), DataError);
    CHECK_THROWS_AS(ardl_config_from_json(json::parse(
                        R"({"dependent": "y", "key_regressor": "x", "controls": 3})")),
                    DataError);
    CHECK_THROWS_WITH_AS(
        ardl_config_from_json(json::parse(
            R"({"dependent": "y", "key_regressor": "x", "lag": 2})")),
        doctest::Contains("unknown key 'lag'"), DataError);
}

TEST_CASE("materialization applies transforms and names the new columns") {
    const std::string path = testsup::write_file("mat.csv",
                                                 "period,yield,rate,prices,fx\n"
                                                 "2000-Q1,6.0,5.0,100,40\n"
                                                 "2000-Q2,6.1,5.1,101,41\n"
                                                 "2000-Q3,6.2,5.2,102,42\n"
                                                 "2000-Q4,6.1,5.0,103,43\n"
                                                 "2001-Q1,6.3,5.3,104,44\n"
                                                 "2001-Q2,6.4,5.4,105,45\n");
    const Dataset data = load_csv(path);
    ArdlConfig cfg;
    cfg.dependent = {"yield", Transform::Level};
    cfg.key_regressor = {"fx", Transform::Log};
    cfg.key_regressor_lags = 0;
    cfg.ar_order = 0;
    cfg.controls = {{"prices", Transform::YoY}, {"rate", Transform::Level}};

    SeriesMap series;
    const ArdlSpec spec = materialize_ardl(cfg, data, series);
    CHECK(spec.dependent == "yield");
    CHECK(spec.key_regressor == "log_fx");
    REQUIRE(spec.controls.size() == 2);
    CHECK(spec.controls[0].series == "prices");
    CHECK(spec.controls[0].transform == Transform::YoY);

    CHECK(series.count("yield") == 1);
    CHECK(series.count("log_fx") == 1);
    CHECK(series.count("prices") == 1);
    CHECK(series.count("rate") == 1);
    CHECK(series.at("log_fx")[0].value() ==
          doctest::Approx(std::log(40.0)).epsilon(1e-14));

    ArdlConfig yoy_dep = cfg;
    yoy_dep.dependent = {"prices", Transform::YoY};
    SeriesMap series2;
    const ArdlSpec spec2 = materialize_ardl(yoy_dep, data, series2);
    CHECK(spec2.dependent == "prices_yoy");
    CHECK(series2.count("prices_yoy") == 1);
    CHECK(series2.at("prices_yoy")[4].value() ==
          doctest::Approx(100.0 * (104.0 / 100.0 - 1.0)).epsilon(1e-12));

    cfg.dependent = {"ghost", Transform::Level};
    SeriesMap series3;
    CHECK_THROWS_AS(materialize_ardl(cfg, data, series3), DataError);
}

TEST_CASE("battery config resolves relative csv paths") {
    const json j = json::parse(R"({
        "countries": [
            {"name": "India", "csv": "data/india.csv",
             "cause": "fiscal", "effect": "external"},
            {"name": "China", "csv": "/abs/china.csv",
             "cause": "fiscal", "effect": "external", "max_lag": 4}
        ]
    })");
    const auto countries = battery_from_json(j, "/cfgdir");
    REQUIRE(countries.size() == 2);
    CHECK(countries[0].csv_path == "/cfgdir/data/india.csv");
    CHECK(countries[0].max_lag == 0);
    CHECK(countries[1].csv_path == "/abs/china.csv");
    CHECK(countries[1].max_lag == 4);

    const auto bare = battery_from_json(j, "");
    CHECK(bare[0].csv_path == "data/india.csv");

    CHECK_THROWS_AS(battery_from_json(json::parse(R"({"countries": 1})"), ""),
                    DataError);
    CHECK_THROWS_WITH_AS(
        battery_from_json(
            json::parse(R"({"countries": [{"csv": "x", "cause": "a", "effect": "b"}]})"),
            ""),
        doctest::Contains("'name'"), DataError);
    CHECK_THROWS_AS(battery_from_json(json::parse(R"({"country": []})"), ""),
                    DataError);
}

TEST_CASE("equilibrium config") {
    const RerConfig minimal = rer_from_json(
        json::parse(R"({"domestic": {}, "reference": {}})"));
    CHECK(minimal.formulation == Formulation::PriceLevel);
    CHECK(!minimal.observed_rer.has_value());
    CHECK(!minimal.p_ratio.has_value());

    const RerConfig full = rer_from_json(json::parse(R"({
        "domestic": {"label": "d", "g_y": 0.04},
        "reference": {"label": "r", "g_y": 0.02},
        "bilson": {"psi0": 0.1, "psi1": 0.03},
        "formulation": "monetary",
        "observed_rer": 1.4,
        "p_ratio": 1.2
    })"));
    CHECK(full.formulation == Formulation::Monetary);
    CHECK(full.domestic.label == "d");
    CHECK(full.bilson.psi0 == 0.1);
    CHECK(full.observed_rer == 1.4);
    CHECK(full.p_ratio == 1.2);

    CHECK_THROWS_WITH_AS(rer_from_json(json::parse(R"({"domestic": {}})")),
                         doctest::Contains("required"), DataError);
    CHECK_THROWS_AS(rer_from_json(json::parse(
                        R"({"domestic": {}, "reference": {}, "observed_rer": "x"})")),
                    DataError);
}

TEST_CASE("simulation config with debt and calendar") {
    const json j = json::parse(R"({
        "initial": {"label": "d", "k": 10, "dk": 1},
        "reference": {"label": "r", "g_y": 0.01},
        "policy": {"kind": "pegged", "reserves": 100},
        "bilson": {"psi1": 0.02},
        "formulation": "price",
        "target_g": 0.03,
        "horizon": 40,
        "initial_rer": 1.1,
        "neutrality_tol": 1e-5,
        "debt": {"source": "international", "amount": 5.0,
                 "service": [0.5, 0.5], "at_period": 3},
        "dk_floor": 1e-4,
        "seed": 12,
        "reference_noise_sigma": 0.01,
        "start_period": "1999-Q3"
    })");
    const SimulationConfig cfg = simulation_from_json(j);
    CHECK(cfg.initial.label == "d");
    CHECK(cfg.policy.kind == PolicyRegime::Kind::Pegged);
    CHECK(cfg.policy.reserve_scale == 100.0);
    CHECK(cfg.target_g == 0.03);
    CHECK(cfg.horizon == 40);
    CHECK(cfg.initial_rer == 1.1);
    REQUIRE(cfg.debt.has_value());
    CHECK(cfg.debt->source == DebtFinancing::Source::International);
    CHECK(cfg.debt->amount == 5.0);
    CHECK(cfg.debt->service == std::vector<double>{0.5, 0.5});
    CHECK(cfg.debt->at_period == 3);
    CHECK(cfg.dk_floor == 1e-4);
    CHECK(cfg.seed == 12);
    CHECK(cfg.start_period == Period{1999, 3});
    CHECK(cfg.frequency == Frequency::Quarterly);

    const SimulationConfig minimal = simulation_from_json(json::parse(R"({
        "initial": {}, "reference": {}, "target_g": 0.02, "horizon": 10
    })"));
    CHECK(minimal.policy.kind == PolicyRegime::Kind::Floating);
    CHECK(minimal.reference_accumulates);
    CHECK(minimal.start_period == Period{2000, 1});
    CHECK(minimal.frequency == Frequency::Quarterly);
    CHECK(!minimal.debt.has_value());
    CHECK(minimal.seed == 0);

    const SimulationConfig annual = simulation_from_json(json::parse(R"({
        "initial": {}, "reference": {}, "target_g": 0.02, "horizon": 10,
        "start_period": "1999"
    })"));
    CHECK(annual.frequency == Frequency::Annual);
    CHECK(annual.start_period == Period{1999, 1});

    CHECK_THROWS_WITH_AS(
        simulation_from_json(json::parse(
            R"({"initial": {}, "reference": {}, "target_g": 0.02})")),
        doctest::Contains("'horizon'"), DataError);
    CHECK_THROWS_WITH_AS(
        simulation_from_json(json::parse(
            R"({"initial": {}, "reference": {}, "target_g": 0.02, "horizon": 10,
                "seed": -4})")),
        doctest::Contains("seed"), DataError);
    CHECK_THROWS_AS(
        simulation_from_json(json::parse(
            R"({"initial": {}, "reference": {}, "target_g": 0.02, "horizon": 10,
                "seed": 1.5})")),
        DataError);
    CHECK_THROWS_AS(
        simulation_from_json(json::parse(
            R"({"initial": {}, "reference": {}, "target_g": 0.02, "horizon": 10,
                "debt": {"source": "martian", "amount": 1}})")),
        DataError);
    CHECK_THROWS_WITH_AS(
        simulation_from_json(json::parse(
            R"({"initial": {}, "reference": {}, "target_g": 0.02, "horizon": 10,
                "horizn": 10})")),
        doctest::Contains("unknown key 'horizn'"), DataError);

    const SimulationConfig with_path = simulation_from_json(json::parse(R"({
        "initial": {}, "reference": {}, "target_g": 0.02, "horizon": 5,
        "reference_path": [{"g_y": 0.01}, {"g_y": 0.02}]
    })"));
    REQUIRE(with_path.reference_path.size() == 2);
    CHECK(with_path.reference_path[1].g_y == 0.02);
}

TEST_CASE("neutral rates config") {
    const NeutralRatesConfig cfg = neutral_rates_from_json(json::parse(R"({
        "economies": [{"label": "a"}, {"label": "b"}],
        "spread_threshold": 0.01
    })"));
    REQUIRE(cfg.economies.size() == 2);
    CHECK(cfg.economies[0].label == "a");
    CHECK(cfg.spread_threshold == 0.01);

    const NeutralRatesConfig d = neutral_rates_from_json(
        json::parse(R"({"economies": [{}, {}]})"));
    CHECK(d.spread_threshold == 0.005);

    CHECK_THROWS_AS(neutral_rates_from_json(json::parse(R"({"economies": {}})")),
                    DataError);
}

TEST_CASE("json file loading") {
    CHECK_THROWS_WITH_AS(load_json_file("/nonexistent/cfg.json"),
                         doctest::Contains("cannot open"), DataError);
    const std::string bad = testsup::write_file("bad.json", "{not json");
    CHECK_THROWS_WITH_AS(load_json_file(bad), doctest::Contains("config"),
                         DataError);
    const std::string good = testsup::write_file("good.json", R"({"a": 1})");
    CHECK(load_json_file(good).at("a") == 1);
}

} // TEST_SUITE
