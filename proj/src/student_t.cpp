#include "tslab/student_t.hpp"

#include <cmath>
#include <limits>

#include "tslab/error.hpp"

namespace tslab {

namespace {

constexpr double kTolerance = 1e-12;
constexpr int kMaxIterations = 300;
constexpr double kTiny = 1e-300;  // Lentz guard against zero denominators

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kTolerance) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw Error(Errc::bad_argument, "incomplete beta needs positive parameters");
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(Errc::bad_argument, "incomplete beta argument outside [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);

    // symmetry switch keeps the continued fraction in its fast-converging range
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_sf(double t, int df) {
    if (df < 1) throw Error(Errc::invalid_df, "degrees of freedom must be >= 1");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (t < 0.0) return 1.0 - student_t_sf(-t, df);
    if (std::isinf(t)) return 0.0;
    if (t == 0.0) return 0.5;

    const double n = static_cast<double>(df);
    const double x = n / (n + t * t);
    return 0.5 * regularized_incomplete_beta(0.5 * n, 0.5, x);
}

}  // namespace tslab
