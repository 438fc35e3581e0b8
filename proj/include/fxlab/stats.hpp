#pragma once

namespace fxlab {

// Test statistic with its degrees of freedom. df1 is unused for t statistics.
struct TestStatistic {
    double value = 0.0;
    double df1 = 0.0;
    double df2 = 0.0;
};

// I_x(a,b), continued fraction via modified Lentz with the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) on the converging branch. Absolute error < 1e-10
// over the df ranges used here.
double regularized_incomplete_beta(double x, double a, double b);

double student_t_cdf(double t, double df);

// Two-sided p for a t statistic: 2*(1 - cdf(|t|)), evaluated through the beta
// tail so small p-values keep relative accuracy.
double student_t_two_sided_p(double t, double df);

double f_cdf(double x, double d1, double d2);

double t_statistic_pvalue(const TestStatistic& s);  // two-sided, uses df2
double f_statistic_pvalue(const TestStatistic& s);  // 1 - f_cdf, uses df1/df2

} // namespace fxlab
