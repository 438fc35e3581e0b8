#include "fxlab/equilibrium.hpp"

#include <cmath>

#include "fxlab/errors.hpp"

namespace fxlab {

namespace {

double parity_constant(const BilsonParams& b, Formulation f) {
    return f == Formulation::PriceLevel ? std::exp(b.psi0)
                                        : std::exp(b.c0 + b.lambda * b.t);
}

} // namespace

void validate(const EconomyState& e) {
    auto bad = [&](const std::string& what) {
        throw DataError("economy '" + e.label + "': " + what);
    };
    if (!(e.alpha > 0.0 && e.alpha < 1.0)) bad("alpha must lie in (0,1)");
    if (!(e.k > 0.0)) bad("k must be positive");
    if (!(e.n > 0.0)) bad("n must be positive");
    if (!(e.M > 0.0)) bad("M must be positive");
    if (!(e.P > 0.0)) bad("P must be positive");
    if (!(e.Y > 0.0)) bad("Y must be positive");
    if (!std::isfinite(e.g_y) || !std::isfinite(e.dk) || !std::isfinite(e.i))
        bad("non-finite field");
}

double qtm_velocity(const EconomyState& e) {
    validate(e);
    return e.P * e.Y / e.M;
}

double solow_output(const SolowParams& p, double k) {
    if (!(p.z > 0.0))
        throw DataError("solow_output: z must be positive");
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw DataError("solow_output: alpha must lie in (0,1)");
    if (!(k > 0.0))
        throw DataError("solow_output: k must be positive");
    return p.z * std::pow(k, p.alpha);
}

double solow_marginal(const SolowParams& p, double k) {
    return p.alpha * solow_output(p, k) / k;
}

double neutral_growth_rate(const EconomyState& e) {
    validate(e);
    return e.alpha * e.dk / e.k;
}

double growth_side(const EconomyState& e, const BilsonParams& b, Formulation f) {
    validate(e);
    if (e.dk == 0.0)
        throw NumericError("growth_side: economy '" + e.label +
                           "' has dk = 0, no defined side value");
    double side;
    if (f == Formulation::PriceLevel) {
        side = e.g_y * e.k * std::exp(b.psi1 * e.i) / (e.alpha * e.dk);
    } else {
        double v = qtm_velocity(e);
        side = e.g_y * e.k * std::exp(b.epsilon * e.i) / (e.alpha * e.dk) *
               std::pow(e.Y, b.eta - 1.0) / v;
    }
    if (!(side > 0.0) || !std::isfinite(side))
        throw NumericError("growth_side: economy '" + e.label +
                           "' has a non-positive side value");
    return side;
}

EquilibriumResult implied_rer(const EconomyState& domestic,
                              const EconomyState& reference,
                              const BilsonParams& b, Formulation f) {
    EquilibriumResult r;
    r.formulation = f;
    r.domestic_side = growth_side(domestic, b, f);
    r.reference_side = growth_side(reference, b, f);
    r.implied_rer = r.domestic_side / (r.reference_side * parity_constant(b, f));
    r.log_imbalance = 0.0;
    return r;
}

EquilibriumResult usd_generalised_rer(const EconomyState& x,
                                      const EconomyState& usd, double p_ratio,
                                      const BilsonParams& b, Formulation f) {
    if (!(p_ratio > 0.0))
        throw DataError("usd_generalised_rer: p_ratio must be positive");
    EquilibriumResult r;
    r.formulation = f;
    r.domestic_side = growth_side(x, b, f);
    r.reference_side = growth_side(usd, b, f);
    r.implied_rer = r.domestic_side / (r.reference_side * p_ratio);
    r.log_imbalance = 0.0;
    return r;
}

double log_imbalance(const EconomyState& domestic, const EconomyState& reference,
                     double observed_rer, const BilsonParams& b, Formulation f) {
    if (!(observed_rer > 0.0))
        throw DataError("log_imbalance: observed RER must be positive");
    double dom = growth_side(domestic, b, f);
    double ref = growth_side(reference, b, f);
    return std::log(dom) - std::log(ref * parity_constant(b, f) * observed_rer);
}

double sectoral_residual(const SectoralAccounts& a) {
    return (a.S - a.I) - (a.G - a.T) - a.NX;
}

} // namespace fxlab
