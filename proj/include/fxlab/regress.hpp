#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace fxlab {

// Rectangular estimation sample with named regressor columns. X already
// contains the constant column (position 0) when has_intercept is set.
struct DesignMatrix {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    std::vector<std::string> column_names;
    std::string dependent_name;
    bool has_intercept = true;
};

struct OlsFit {
    std::vector<std::string> column_names;
    std::string dependent_name;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd p_values;
    Eigen::VectorXd residuals;
    double r2 = 0.0;
    double adj_r2 = 0.0;
    double f_stat = 0.0;
    double f_pvalue = 1.0;
    double aic = 0.0;
    double bic = 0.0;
    long nobs = 0;
    long df_resid = 0;
    double rss = 0.0;
    double condition_number = 0.0;
    std::vector<std::string> warnings;
};

// OLS through column-pivoted Householder QR. Classical homoskedastic standard
// errors; F tests all non-intercept coefficients jointly zero; AIC/BIC from the
// full Gaussian log-likelihood with k = number of estimated terms.
OlsFit ols_fit(const DesignMatrix& d);

// RSS of the model re-fit without the named columns. Dropping nothing returns
// the unrestricted RSS.
double restricted_rss(const DesignMatrix& d, const std::vector<std::string>& drop);

} // namespace fxlab
