#include "fxlab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "fxlab/errors.hpp"

namespace fxlab {

namespace {

constexpr double kReserveEpsilon = 1e-9;

std::string format_amount(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

} // namespace

void validate(const PolicyRegime& p) {
    if (!(p.vent_share >= 0.0 && p.vent_share <= 1.0)) {
        throw DataError("policy vent share must lie in [0, 1]");
    }
    if (!(p.post_crisis_vent_share >= 0.0 && p.post_crisis_vent_share <= 1.0)) {
        throw DataError("post-crisis vent share must lie in [0, 1]");
    }
    if (p.kind == PolicyRegime::Kind::Pegged) {
        if (!(p.reserves >= 0.0) || !std::isfinite(p.reserves)) {
            throw DataError("pegged policy requires nonnegative finite reserves");
        }
        if (!(p.drain_coefficient > 0.0) || !std::isfinite(p.drain_coefficient)) {
            throw DataError("reserve drain coefficient must be positive");
        }
        if (!(p.reserve_scale >= 0.0) || !std::isfinite(p.reserve_scale)) {
            throw DataError("reserve scale must be nonnegative and finite");
        }
    }
}

GrowthRegime classify_regime(const EconomyState& e, double target_g, double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DataError("neutrality tolerance must be positive");
    }
    GrowthRegime r;
    r.margin = target_g - neutral_growth_rate(e);
    if (std::abs(r.margin) <= tol) {
        r.kind = GrowthRegime::Kind::CapitalNeutral;
    } else if (r.margin > 0.0) {
        r.kind = GrowthRegime::Kind::CapitalDeficit;
    } else {
        r.kind = GrowthRegime::Kind::CapitalSurplus;
    }
    return r;
}

StepOutcome step(const EconomyState& state, const EconomyState& reference,
                 double rer, const PolicyRegime& policy, const BilsonParams& b,
                 Formulation f) {
    validate(state);
    validate(reference);
    validate(policy);
    if (!(rer > 0.0) || !std::isfinite(rer)) {
        throw DataError("nominal exchange rate must be positive and finite");
    }

    StepOutcome out;
    out.state = state;
    out.rer = rer;
    out.policy = policy;

    const double real_rer = rer * reference.P / state.P;
    const double m = log_imbalance(state, reference, real_rer, b, f);

    if (policy.kind == PolicyRegime::Kind::Floating) {
        const double theta = policy.vent_share;
        out.rer = rer * std::exp(theta * m);
        out.state.P = state.P * std::exp(-((1.0 - theta) * m));
        return out;
    }

    const double scale =
        policy.reserve_scale > 0.0 ? policy.reserve_scale : policy.reserves;
    const double drain = policy.drain_coefficient * std::abs(m) * scale;
    if (drain <= 0.0) {
        return out;
    }
    if (policy.reserves - drain <= kReserveEpsilon * scale) {
        const EquilibriumResult eq = implied_rer(state, reference, b, f);
        const double new_rer = eq.implied_rer * state.P / reference.P;
        ScenarioEvent ev;
        ev.type = ScenarioEvent::Type::CrisisDevaluation;
        ev.jump = new_rer / rer;
        ev.note = "reserves exhausted; peg abandoned at the implied rate";
        out.event = ev;
        out.rer = new_rer;
        out.policy.kind = PolicyRegime::Kind::Floating;
        out.policy.vent_share = policy.post_crisis_vent_share;
        out.policy.reserves = 0.0;
        return out;
    }
    out.policy.reserves = policy.reserves - drain;
    return out;
}

CapitalPath baseline_capital_path(double k0, double dk0, int horizon) {
    if (horizon < 1) {
        throw DataError("capital path horizon must be at least 1");
    }
    CapitalPath path;
    path.k.resize(static_cast<std::size_t>(horizon));
    path.dk.assign(static_cast<std::size_t>(horizon), dk0);
    path.k[0] = k0;
    for (int t = 1; t < horizon; ++t) {
        path.k[static_cast<std::size_t>(t)] =
            path.k[static_cast<std::size_t>(t - 1)] + dk0;
    }
    return path;
}

CapitalPath apply_debt_financing(const CapitalPath& base, const DebtFinancing& d,
                                 int at_period, double dk_floor) {
    const int horizon = static_cast<int>(base.k.size());
    if (at_period < 0 || at_period >= horizon) {
        throw DataError("debt financing period lies outside the simulation horizon");
    }
    if (!(d.amount >= 0.0) || !std::isfinite(d.amount)) {
        throw DataError("debt financing amount must be nonnegative and finite");
    }
    for (double s : d.service) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw DataError("debt service payments must be nonnegative and finite");
        }
    }

    CapitalPath path = base;
    if (d.source == DebtFinancing::Source::Domestic) {
        path.ledger.push_back("period " + std::to_string(at_period) +
                              ": domestic debt financing of " +
                              format_amount(d.amount) +
                              " absorbed internally; aggregate capital unchanged");
        return path;
    }

    for (int t = at_period + 1; t < horizon; ++t) {
        const std::size_t si = static_cast<std::size_t>(t - at_period - 1);
        if (si >= d.service.size()) {
            break;
        }
        const std::size_t ti = static_cast<std::size_t>(t);
        path.dk[ti] = base.dk[ti] - d.service[si];
        if (path.dk[ti] < dk_floor) {
            path.dk[ti] = dk_floor;
            path.stress_periods.push_back(t);
        }
    }

    // Rebuilding without the principal first keeps the zero-service case a
    // bit-exact shift of the baseline.
    for (int t = 1; t < horizon; ++t) {
        const std::size_t ti = static_cast<std::size_t>(t);
        path.k[ti] = path.k[ti - 1] + path.dk[ti - 1];
    }
    for (int t = at_period; t < horizon; ++t) {
        path.k[static_cast<std::size_t>(t)] += d.amount;
    }
    return path;
}

namespace {

std::vector<EconomyState> build_reference_path(const SimulationConfig& cfg) {
    std::vector<EconomyState> refs;
    refs.reserve(static_cast<std::size_t>(cfg.horizon));
    if (!cfg.reference_path.empty()) {
        for (int t = 0; t < cfg.horizon; ++t) {
            const std::size_t i = std::min(static_cast<std::size_t>(t),
                                           cfg.reference_path.size() - 1);
            refs.push_back(cfg.reference_path[i]);
        }
    } else {
        EconomyState ref = cfg.reference;
        for (int t = 0; t < cfg.horizon; ++t) {
            refs.push_back(ref);
            if (cfg.reference_accumulates) {
                ref.k += ref.dk;
            }
        }
    }
    if (cfg.reference_noise_sigma > 0.0) {
        std::mt19937_64 rng(cfg.seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        const double sigma = cfg.reference_noise_sigma;
        for (auto& ref : refs) {
            ref.g_y *= std::exp(sigma * normal(rng) - 0.5 * sigma * sigma);
        }
    }
    for (const auto& ref : refs) {
        validate(ref);
    }
    return refs;
}

} // namespace

ScenarioPath simulate(const SimulationConfig& cfg) {
    if (cfg.horizon < 1) {
        throw DataError("simulation horizon must be at least 1");
    }
    if (!(cfg.initial_rer > 0.0) || !std::isfinite(cfg.initial_rer)) {
        throw DataError("initial exchange rate must be positive and finite");
    }
    if (!(cfg.neutrality_tol > 0.0)) {
        throw DataError("neutrality tolerance must be positive");
    }
    if (!std::isfinite(cfg.target_g)) {
        throw DataError("target growth rate must be finite");
    }
    validate(cfg.initial);
    validate(cfg.reference);
    validate(cfg.policy);
    if (cfg.reference_noise_sigma < 0.0 || !std::isfinite(cfg.reference_noise_sigma)) {
        throw DataError("reference noise sigma must be nonnegative and finite");
    }

    CapitalPath capital =
        baseline_capital_path(cfg.initial.k, cfg.initial.dk, cfg.horizon);
    if (cfg.debt) {
        capital =
            apply_debt_financing(capital, *cfg.debt, cfg.debt->at_period, cfg.dk_floor);
    }
    const std::vector<EconomyState> refs = build_reference_path(cfg);

    ScenarioPath path;
    path.start_period = cfg.start_period;
    path.frequency = cfg.frequency;
    path.target_g = cfg.target_g;
    path.points.reserve(static_cast<std::size_t>(cfg.horizon));

    double rer = cfg.initial_rer;
    double price = cfg.initial.P;
    PolicyRegime policy = cfg.policy;
    if (policy.kind == PolicyRegime::Kind::Pegged && policy.reserve_scale <= 0.0) {
        policy.reserve_scale = policy.reserves;
    }

    for (int t = 0; t < cfg.horizon; ++t) {
        const std::size_t ti = static_cast<std::size_t>(t);
        EconomyState state = cfg.initial;
        state.g_y = cfg.target_g;
        state.k = capital.k[ti];
        state.dk = capital.dk[ti];
        state.P = price;

        PathPoint point;
        point.period = t;
        point.growth_regime = classify_regime(state, cfg.target_g, cfg.neutrality_tol);
        point.policy_kind = policy.kind;

        if (cfg.debt && cfg.debt->source == DebtFinancing::Source::Domestic &&
            t == cfg.debt->at_period) {
            ScenarioEvent ev;
            ev.type = ScenarioEvent::Type::DebtLedger;
            ev.period = t;
            ev.note = capital.ledger.empty() ? "domestic debt financing recorded"
                                             : capital.ledger.front();
            point.events.push_back(ev);
        }
        if (std::find(capital.stress_periods.begin(), capital.stress_periods.end(),
                      t) != capital.stress_periods.end()) {
            ScenarioEvent ev;
            ev.type = ScenarioEvent::Type::FinancingStress;
            ev.period = t;
            ev.note = "debt service pushed capital accumulation to the floor";
            point.events.push_back(ev);
        }

        StepOutcome out = step(state, refs[ti], rer, policy, cfg.bilson,
                               cfg.formulation);
        if (out.event) {
            out.event->period = t;
            point.events.push_back(*out.event);
        }

        point.state = out.state;
        point.rer = out.rer;
        point.price_level = out.state.P;
        point.reserves = out.policy.kind == PolicyRegime::Kind::Pegged
                             ? out.policy.reserves
                             : (out.event ? 0.0 : policy.reserves);
        for (const auto& ev : point.events) {
            path.events.push_back(ev);
        }
        path.points.push_back(std::move(point));

        rer = out.rer;
        price = out.state.P;
        policy = out.policy;
    }
    return path;
}

std::vector<NeutralRateRow> neutral_rate_comparison(
    const std::vector<EconomyState>& economies, double spread_threshold) {
    if (economies.size() < 2) {
        throw DataError("neutral rate comparison needs at least two economies");
    }
    if (!(spread_threshold >= 0.0) || !std::isfinite(spread_threshold)) {
        throw DataError("neutral rate spread threshold must be nonnegative");
    }
    for (const auto& e : economies) {
        validate(e);
    }
    std::vector<NeutralRateRow> rows;
    for (std::size_t i = 0; i < economies.size(); ++i) {
        for (std::size_t j = i + 1; j < economies.size(); ++j) {
            NeutralRateRow row;
            row.economy_a = economies[i].label.empty()
                                ? "economy_" + std::to_string(i + 1)
                                : economies[i].label;
            row.economy_b = economies[j].label.empty()
                                ? "economy_" + std::to_string(j + 1)
                                : economies[j].label;
            row.g_a = neutral_growth_rate(economies[i]);
            row.g_b = neutral_growth_rate(economies[j]);
            row.spread = std::abs(row.g_a - row.g_b);
            row.out_of_neutrality = row.spread > spread_threshold;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace fxlab
