#include "fxlab/stats.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fxlab/errors.hpp"

namespace fxlab {

namespace {

constexpr int kMaxIterations = 300;
constexpr double kTolerance = 1e-14;

// Continued fraction for the incomplete beta, modified Lentz form.
double beta_continued_fraction(double x, double a, double b) {
    const double fpmin = std::numeric_limits<double>::min() / kTolerance;
    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kTolerance) return h;
    }
    throw NumericError("regularized_incomplete_beta: continued fraction did not "
                       "converge (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

} // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0))
        throw NumericError("regularized_incomplete_beta: x outside [0,1]");
    if (!(a > 0.0) || !(b > 0.0))
        throw NumericError("regularized_incomplete_beta: a and b must be positive");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(x, a, b) / a;
    return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_cdf(double t, double df) {
    if (!(df > 0.0))
        throw NumericError("student_t_cdf: df must be positive");
    if (t == 0.0) return 0.5;
    double x = df / (df + t * t);
    double tail = 0.5 * regularized_incomplete_beta(x, 0.5 * df, 0.5);
    return t > 0.0 ? 1.0 - tail : tail;
}

double student_t_two_sided_p(double t, double df) {
    if (!(df > 0.0))
        throw NumericError("student_t_two_sided_p: df must be positive");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    return regularized_incomplete_beta(df / (df + t * t), 0.5 * df, 0.5);
}

double f_cdf(double x, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0))
        throw NumericError("f_cdf: degrees of freedom must be positive");
    if (x < 0.0)
        throw NumericError("f_cdf: negative argument");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return regularized_incomplete_beta(d1 * x / (d1 * x + d2), 0.5 * d1, 0.5 * d2);
}

double t_statistic_pvalue(const TestStatistic& s) {
    return student_t_two_sided_p(s.value, s.df2);
}

double f_statistic_pvalue(const TestStatistic& s) {
    return 1.0 - f_cdf(s.value, s.df1, s.df2);
}

} // namespace fxlab
