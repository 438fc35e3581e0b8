#include "fxlab/regress.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "fxlab/errors.hpp"
#include "fxlab/stats.hpp"

namespace fxlab {

namespace {

constexpr double kConditionWarn = 1e8;
constexpr double kConditionError = 1e12;

void validate_design(const DesignMatrix& d) {
    const long n = d.X.rows();
    const long k = d.X.cols();
    if (k < 1)
        throw DataError("ols_fit: design has no columns");
    if (d.y.rows() != n)
        throw DataError("ols_fit: dependent length does not match design rows");
    if (static_cast<long>(d.column_names.size()) != k)
        throw DataError("ols_fit: column name count does not match design columns");
    if (n <= k)
        throw DataError("ols_fit: insufficient data, " + std::to_string(n) +
                        " observations for " + std::to_string(k) + " regressors");
    std::set<std::string> seen(d.column_names.begin(), d.column_names.end());
    if (static_cast<long>(seen.size()) != k)
        throw DataError("ols_fit: column names are not unique");
    if (!d.X.allFinite() || !d.y.allFinite())
        throw DataError("ols_fit: design contains non-finite entries");
}

} // namespace

OlsFit ols_fit(const DesignMatrix& d) {
    validate_design(d);
    const long n = d.X.rows();
    const long k = d.X.cols();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d.X);
    if (qr.rank() < k) {
        // The pivots past the numerical rank are the columns explained by the rest.
        const auto& perm = qr.colsPermutation().indices();
        std::string names;
        for (long j = qr.rank(); j < k; ++j) {
            if (!names.empty()) names += ", ";
            names += d.column_names[static_cast<std::size_t>(perm[j])];
        }
        throw NumericError("ols_fit: rank-deficient design; dependent columns: " + names);
    }

    Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
    double cond = std::abs(R(0, 0)) / std::abs(R(k - 1, k - 1));
    if (cond > kConditionError)
        throw NumericError("ols_fit: condition number " + std::to_string(cond) +
                           " exceeds 1e12");

    OlsFit fit;
    fit.column_names = d.column_names;
    fit.dependent_name = d.dependent_name;
    fit.nobs = n;
    fit.df_resid = n - k;
    fit.condition_number = cond;
    if (cond > kConditionWarn)
        fit.warnings.push_back("ill-conditioned design, condition number " +
                               std::to_string(cond));

    fit.coefficients = qr.solve(d.y);
    fit.residuals = d.y - d.X * fit.coefficients;
    fit.rss = fit.residuals.squaredNorm();

    // (X'X)^-1 = P (R'R)^-1 P' from the pivoted factorization.
    Eigen::MatrixXd rinv = R.triangularView<Eigen::Upper>()
                               .solve(Eigen::MatrixXd::Identity(k, k));
    Eigen::MatrixXd xtx_inv = rinv * rinv.transpose();
    xtx_inv = qr.colsPermutation() * xtx_inv * qr.colsPermutation().transpose();

    double sigma2 = fit.rss / static_cast<double>(fit.df_resid);
    fit.standard_errors = (sigma2 * xtx_inv.diagonal()).array().max(0.0).sqrt();
    fit.t_stats.resize(k);
    fit.p_values.resize(k);
    for (long j = 0; j < k; ++j) {
        fit.t_stats[j] = fit.coefficients[j] / fit.standard_errors[j];
        fit.p_values[j] = student_t_two_sided_p(fit.t_stats[j],
                                                static_cast<double>(fit.df_resid));
    }

    double tss;
    if (d.has_intercept) {
        double ybar = d.y.mean();
        tss = (d.y.array() - ybar).matrix().squaredNorm();
    } else {
        tss = d.y.squaredNorm();
    }
    fit.r2 = tss > 0.0 ? 1.0 - fit.rss / tss : 1.0;
    long df_model_base = d.has_intercept ? 1 : 0;
    fit.adj_r2 = 1.0 - (1.0 - fit.r2) *
                           static_cast<double>(n - df_model_base) /
                           static_cast<double>(fit.df_resid);

    long q = k - df_model_base;  // jointly tested non-intercept terms
    if (q == 0) {
        fit.f_stat = std::numeric_limits<double>::quiet_NaN();
        fit.f_pvalue = std::numeric_limits<double>::quiet_NaN();
    } else if (fit.rss > 0.0) {
        fit.f_stat = ((tss - fit.rss) / static_cast<double>(q)) /
                     (fit.rss / static_cast<double>(fit.df_resid));
        fit.f_stat = std::max(fit.f_stat, 0.0);
        fit.f_pvalue = 1.0 - f_cdf(fit.f_stat, static_cast<double>(q),
                                   static_cast<double>(fit.df_resid));
    } else {
        fit.f_stat = std::numeric_limits<double>::infinity();
        fit.f_pvalue = 0.0;
    }

    // Gaussian log-likelihood at the ML variance RSS/n.
    double loglik = -0.5 * static_cast<double>(n) *
                    (std::log(2.0 * std::numbers::pi) +
                     std::log(fit.rss / static_cast<double>(n)) + 1.0);
    fit.aic = -2.0 * loglik + 2.0 * static_cast<double>(k);
    fit.bic = -2.0 * loglik + static_cast<double>(k) * std::log(static_cast<double>(n));
    return fit;
}

double restricted_rss(const DesignMatrix& d, const std::vector<std::string>& drop) {
    for (const auto& name : drop) {
        auto it = std::find(d.column_names.begin(), d.column_names.end(), name);
        if (it == d.column_names.end())
            throw DataError("restricted_rss: no column named '" + name + "'");
        if (d.has_intercept && it == d.column_names.begin())
            throw DataError("restricted_rss: cannot drop the intercept column");
    }
    if (drop.empty())
        return ols_fit(d).rss;

    std::vector<long> keep;
    for (long j = 0; j < d.X.cols(); ++j) {
        const auto& name = d.column_names[static_cast<std::size_t>(j)];
        if (std::find(drop.begin(), drop.end(), name) == drop.end())
            keep.push_back(j);
    }
    if (keep.empty())
        throw DataError("restricted_rss: restriction drops every column");

    DesignMatrix r;
    r.X.resize(d.X.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
        r.X.col(static_cast<Eigen::Index>(j)) = d.X.col(keep[j]);
        r.column_names.push_back(d.column_names[static_cast<std::size_t>(keep[j])]);
    }
    r.y = d.y;
    r.dependent_name = d.dependent_name;
    r.has_intercept = d.has_intercept;
    return ols_fit(r).rss;
}

} // namespace fxlab
