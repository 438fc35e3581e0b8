#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "fxlab/config.hpp"
#include "fxlab/dataset.hpp"
#include "fxlab/equilibrium.hpp"
#include "fxlab/errors.hpp"
#include "fxlab/inference.hpp"
#include "fxlab/report.hpp"
#include "fxlab/scenario.hpp"

namespace {

std::string dirname_of(const std::string& path) {
    const std::size_t slash = path.find_last_of('/');
    if (slash == std::string::npos) {
        return "";
    }
    return path.substr(0, slash);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

int run_fit_ardl(const std::string& data_path, const std::string& spec_path) {
    const fxlab::Dataset data = fxlab::load_csv(data_path);
    const fxlab::ArdlConfig cfg =
        fxlab::ardl_config_from_json(fxlab::load_json_file(spec_path));
    fxlab::SeriesMap series;
    const fxlab::ArdlSpec spec = fxlab::materialize_ardl(cfg, data, series);
    const fxlab::OlsFit fit = fxlab::fit_ardl(spec, series);
    std::cout << fxlab::render_regression_table(fit, "");
    for (const auto& w : fit.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return 0;
}

int run_granger(const std::string& data_path, const std::string& cause,
                const std::string& effect, int max_lag) {
    const fxlab::Dataset data = fxlab::load_csv(data_path);
    const auto results =
        fxlab::granger_test(data.column(cause), data.column(effect), max_lag);
    std::cout << fxlab::render_granger_table(results, cause + " -> " + effect);
    return 0;
}

int run_battery(const std::string& config_path) {
    const auto countries = fxlab::battery_from_json(
        fxlab::load_json_file(config_path), dirname_of(config_path));
    const auto entries = fxlab::replication_battery(countries);
    std::cout << fxlab::render_battery_report(entries);
    return 0;
}

int run_rer(const std::string& config_path, const std::string& formulation_flag) {
    fxlab::RerConfig cfg = fxlab::rer_from_json(fxlab::load_json_file(config_path));
    if (!formulation_flag.empty()) {
        cfg.formulation = fxlab::formulation_from_string(formulation_flag);
    }
    const fxlab::EquilibriumResult res =
        cfg.p_ratio ? fxlab::usd_generalised_rer(cfg.domestic, cfg.reference,
                                                 *cfg.p_ratio, cfg.bilson,
                                                 cfg.formulation)
                    : fxlab::implied_rer(cfg.domestic, cfg.reference, cfg.bilson,
                                         cfg.formulation);
    std::cout << "formulation: "
              << (cfg.formulation == fxlab::Formulation::PriceLevel ? "price"
                                                                    : "monetary")
              << "\n";
    std::cout << "domestic side: " << fmt(res.domestic_side) << "\n";
    std::cout << "reference side: " << fmt(res.reference_side) << "\n";
    std::cout << "implied rer: " << fmt(res.implied_rer) << "\n";
    if (cfg.observed_rer) {
        if (!(*cfg.observed_rer > 0.0)) {
            throw fxlab::DataError("observed_rer must be positive");
        }
        const double m = std::log(res.implied_rer) - std::log(*cfg.observed_rer);
        std::cout << "log imbalance at " << fmt(*cfg.observed_rer) << ": " << fmt(m)
                  << "\n";
    }
    return 0;
}

int run_simulate(const std::string& config_path, int horizon_flag,
                 const std::string& out_path, const std::string& events_path) {
    fxlab::SimulationConfig cfg =
        fxlab::simulation_from_json(fxlab::load_json_file(config_path));
    if (horizon_flag > 0) {
        cfg.horizon = horizon_flag;
    }
    const fxlab::ScenarioPath path = fxlab::simulate(cfg);
    fxlab::write_trajectory_csv(path, out_path);
    fxlab::write_event_log(path, events_path);
    std::cout << "periods: " << path.points.size() << "\n";
    std::cout << "events: " << path.events.size() << "\n";
    std::cout << "final rer: " << fmt(path.points.back().rer) << "\n";
    std::cout << "wrote trajectory: " << out_path << "\n";
    std::cout << "wrote events: " << events_path << "\n";
    return 0;
}

int run_neutral_rates(const std::string& config_path) {
    const fxlab::NeutralRatesConfig cfg =
        fxlab::neutral_rates_from_json(fxlab::load_json_file(config_path));
    const auto rows =
        fxlab::neutral_rate_comparison(cfg.economies, cfg.spread_threshold);
    std::cout << fxlab::render_neutral_rates(rows, cfg.spread_threshold);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growth-capital exchange rate toolkit"};
    app.require_subcommand(1);

    std::string data_path;
    std::string spec_path;
    std::string config_path;
    std::string cause;
    std::string effect;
    std::string formulation;
    std::string out_path = "trajectory.csv";
    std::string events_path = "events.txt";
    int max_lag = 7;
    int horizon = 0;

    auto* fit = app.add_subcommand("fit-ardl", "fit a lagged regression and print the table");
    fit->add_option("--data", data_path, "input CSV panel")->required();
    fit->add_option("--spec", spec_path, "regression spec JSON")->required();

    auto* granger = app.add_subcommand("granger", "nested-model causality F tests");
    granger->add_option("--data", data_path, "input CSV panel")->required();
    granger->add_option("--cause", cause, "candidate causal column")->required();
    granger->add_option("--effect", effect, "response column")->required();
    granger->add_option("--max-lag", max_lag, "deepest lag to test (default 7)");

    auto* battery = app.add_subcommand("battery", "causality tables for a set of countries");
    battery->add_option("--config", config_path, "battery config JSON")->required();

    auto* rer = app.add_subcommand("rer", "implied equilibrium real exchange rate");
    rer->add_option("--config", config_path, "economy pair config JSON")->required();
    rer->add_option("--formulation", formulation, "price or monetary (overrides config)");

    auto* simulate = app.add_subcommand("simulate", "currency shock scenario path");
    simulate->add_option("--config", config_path, "scenario config JSON")->required();
    simulate->add_option("--horizon", horizon, "periods to simulate (overrides config)");
    simulate->add_option("--out", out_path, "trajectory CSV path (default trajectory.csv)");
    simulate->add_option("--events", events_path, "event log path (default events.txt)");

    auto* neutral = app.add_subcommand("neutral-rates", "pairwise capital-neutral growth spreads");
    neutral->add_option("--config", config_path, "economy list config JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage problems map to exit 1; --help keeps CLI11's success code.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (fit->parsed()) {
            return run_fit_ardl(data_path, spec_path);
        }
        if (granger->parsed()) {
            return run_granger(data_path, cause, effect, max_lag);
        }
        if (battery->parsed()) {
            return run_battery(config_path);
        }
        if (rer->parsed()) {
            return run_rer(config_path, formulation);
        }
        if (simulate->parsed()) {
            return run_simulate(config_path, horizon, out_path, events_path);
        }
        if (neutral->parsed()) {
            return run_neutral_rates(config_path);
        }
    } catch (const fxlab::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const fxlab::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
