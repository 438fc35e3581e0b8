#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fxlab/equilibrium.hpp"
#include "fxlab/series.hpp"

namespace fxlab {

struct GrowthRegime {
    enum class Kind { CapitalDeficit, CapitalNeutral, CapitalSurplus };
    Kind kind = Kind::CapitalNeutral;
    double margin = 0.0;  // target g - g*
};

// Floating vents imbalance through the nominal rate (share theta) and the
// price level (share 1-theta). Pegged holds the rate and spends reserves.
struct PolicyRegime {
    enum class Kind { Floating, Pegged };
    Kind kind = Kind::Floating;
    double vent_share = 0.5;         // theta in [0,1]
    double reserves = 0.0;           // pegged only, nonnegative
    double drain_coefficient = 0.1;  // kappa > 0
    double reserve_scale = 0.0;      // drain unit; loaders default it to the initial stock
    double post_crisis_vent_share = 0.5;
};

void validate(const PolicyRegime& p);

struct DebtFinancing {
    enum class Source { Domestic, International };
    Source source = Source::International;
    double amount = 0.0;
    std::vector<double> service;  // payments, starting the period after at_period
    int at_period = 0;
};

struct ScenarioEvent {
    enum class Type { CrisisDevaluation, FinancingStress, DebtLedger };
    Type type = Type::CrisisDevaluation;
    int period = 0;
    double jump = 0.0;  // crisis: multiplicative rer devaluation new/old
    std::string note;
};

struct PathPoint {
    int period = 0;
    EconomyState state;      // price level already reflects the period's venting
    double rer = 1.0;        // nominal rate, domestic per reference
    double price_level = 1.0;
    double reserves = 0.0;
    GrowthRegime growth_regime;
    PolicyRegime::Kind policy_kind = PolicyRegime::Kind::Floating;
    std::vector<ScenarioEvent> events;
};

struct ScenarioPath {
    std::vector<PathPoint> points;
    std::vector<ScenarioEvent> events;  // every event, in period order
    Period start_period{2000, 1};
    Frequency frequency = Frequency::Quarterly;
    double target_g = 0.0;
};

GrowthRegime classify_regime(const EconomyState& e, double target_g, double tol);

struct StepOutcome {
    EconomyState state;
    double rer = 1.0;
    PolicyRegime policy;
    std::optional<ScenarioEvent> event;
};

// One period of the venting / peg-defense dynamics at the current nominal
// rate. The imbalance is evaluated at the real rate rer * P_ref / P.
StepOutcome step(const EconomyState& state, const EconomyState& reference,
                 double rer, const PolicyRegime& policy, const BilsonParams& b,
                 Formulation f);

// Exogenous per-capita capital path: k[t+1] = k[t] + dk[t].
struct CapitalPath {
    std::vector<double> k;
    std::vector<double> dk;
    std::vector<int> stress_periods;
    std::vector<std::string> ledger;
};

CapitalPath baseline_capital_path(double k0, double dk0, int horizon);

// International financing boosts k at at_period and charges the service
// schedule against dk afterwards; domestic financing conserves both paths and
// only writes a ledger entry.
CapitalPath apply_debt_financing(const CapitalPath& base, const DebtFinancing& d,
                                 int at_period, double dk_floor);

struct SimulationConfig {
    EconomyState initial;
    EconomyState reference;
    std::vector<EconomyState> reference_path;  // explicit exogenous path, optional
    bool reference_accumulates = true;         // default: reference capital follows k += dk
    PolicyRegime policy;
    BilsonParams bilson;
    Formulation formulation = Formulation::PriceLevel;
    double target_g = 0.0;
    int horizon = 1;
    double initial_rer = 1.0;
    double neutrality_tol = 1e-6;
    std::optional<DebtFinancing> debt;
    double dk_floor = 1e-6;
    std::uint64_t seed = 0;
    double reference_noise_sigma = 0.0;  // lognormal jitter on the reference growth rate
    Period start_period{2000, 1};
    Frequency frequency = Frequency::Quarterly;
};

ScenarioPath simulate(const SimulationConfig& cfg);

struct NeutralRateRow {
    std::string economy_a;
    std::string economy_b;
    double g_a = 0.0;
    double g_b = 0.0;
    double spread = 0.0;  // |g_a - g_b|
    bool out_of_neutrality = false;
};

// Pairwise capital-neutral growth spreads; pairs above the threshold are
// flagged as out of relative neutrality.
std::vector<NeutralRateRow> neutral_rate_comparison(
    const std::vector<EconomyState>& economies, double spread_threshold);

} // namespace fxlab
