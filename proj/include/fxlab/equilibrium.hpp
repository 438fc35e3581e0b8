#pragma once

#include <string>

namespace fxlab {

enum class Formulation { PriceLevel, Monetary };

// One economy's snapshot for the growth-capital equilibrium. Rates are
// per-period and dimensionless; k and dk share real per-capita units.
struct EconomyState {
    std::string label;
    double g_y = 0.0;    // per-capita output growth rate
    double k = 1.0;      // per-capita capital stock
    double dk = 1.0;     // per-period change in per-capita capital
    double alpha = 0.3;  // capital share, in (0,1)
    double i = 0.0;      // nominal policy rate per period
    double Y = 1.0;      // aggregate output
    double P = 1.0;      // price level
    double M = 1.0;      // money supply
    double n = 1.0;      // population
};

void validate(const EconomyState& e);

// Money-demand and price-level parity parameters. eta defaults to 1; epsilon
// mirrors psi1 when left unset by config loaders.
struct BilsonParams {
    double psi0 = 0.0;     // price-level parity constant
    double psi1 = 0.0;     // interest semi-elasticity (price-level form)
    double epsilon = 0.0;  // interest semi-elasticity (monetary form)
    double c0 = 0.0;       // monetary parity constant
    double lambda = 0.0;   // relative money-demand growth
    double eta = 1.0;      // income elasticity of money demand
    double t = 0.0;        // time index for the lambda drift
};

struct SolowParams {
    double z = 1.0;      // total factor productivity
    double alpha = 0.3;  // capital share
};

struct SectoralAccounts {
    double S = 0.0;   // private saving
    double I = 0.0;   // private investment
    double G = 0.0;   // government spending
    double T = 0.0;   // taxes
    double NX = 0.0;  // net exports
};

struct EquilibriumResult {
    Formulation formulation = Formulation::PriceLevel;
    double implied_rer = 1.0;
    double domestic_side = 1.0;
    double reference_side = 1.0;
    double log_imbalance = 0.0;
};

// V = P*Y/M
double qtm_velocity(const EconomyState& e);

// y = z * k^alpha
double solow_output(const SolowParams& p, double k);

// dy/dk = alpha * y / k
double solow_marginal(const SolowParams& p, double k);

// g* = alpha * dk / k, the growth rate exactly supported by current-period
// capital development.
double neutral_growth_rate(const EconomyState& e);

// One economy's side of the equilibrium condition. Price-level form:
// g*k*exp(psi1*i)/(alpha*dk). Monetary form multiplies by Y^(eta-1)/V.
double growth_side(const EconomyState& e, const BilsonParams& b, Formulation f);

// Closed-form RER that clears the equilibrium, domestic in role b and the
// reference in role a.
EquilibriumResult implied_rer(const EconomyState& domestic,
                              const EconomyState& reference,
                              const BilsonParams& b, Formulation f);

// Generalised dollar-trade form: reference side scaled by p_ratio = P_usd/P_$,
// parity constants absorbed.
EquilibriumResult usd_generalised_rer(const EconomyState& x,
                                      const EconomyState& usd, double p_ratio,
                                      const BilsonParams& b, Formulation f);

// ln(domestic side) - ln(reference side * constant * observed RER). Positive
// means depreciation pressure on the domestic currency.
double log_imbalance(const EconomyState& domestic, const EconomyState& reference,
                     double observed_rer, const BilsonParams& b, Formulation f);

// (S - I) - (G - T) - NX; zero iff the accounts are consistent.
double sectoral_residual(const SectoralAccounts& a);

} // namespace fxlab
