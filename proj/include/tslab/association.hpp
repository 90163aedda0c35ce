#pragma once

#include <Eigen/Core>

#include <vector>

#include "tslab/series.hpp"

namespace tslab {

/// Pearson correlation with its two-sided significance test against the
/// null hypothesis of zero correlation.
struct CorrelationTest {
    double r = 0.0;       // in [-1, 1]
    double t = 0.0;       // r * sqrt(df / (1 - r^2)); +/-inf when |r| = 1
    int df = 0;           // n - 2
    double p = 1.0;       // two-sided; computed value, display clamps below 2.2e-16
    Eigen::Index n = 0;
    bool degenerate = false;  // |r| = 1: t is an infinity sentinel, p = 0
};

/// Correlation estimates indexed by integer month lag k in [-max_lag, max_lag].
/// r_xy(k) correlates x shifted forward by k months against y, using
/// full-sample means and the shared 1/n normalization, so |r| <= 1 at every lag.
struct CrossCorrelogram {
    int max_lag = 0;
    Eigen::VectorXd r;  // size 2*max_lag + 1; entry k + max_lag

    double at(int k) const { return r[k + max_lag]; }
    static double year_fraction(int k) { return k / 12.0; }

    struct Peak {
        int lag = 0;
        double value = 0.0;
    };
    /// Entry with the largest |r|; ties resolved toward the smaller |lag|,
    /// then toward the positive lag.
    Peak peak() const;
};

/// Sample Pearson correlation. errors: constant input -> zero_variance.
double pearson_r(const AlignedPair& pair);

/// r, t = r*sqrt(df/(1-r^2)), df = n-2, p = 2 * student_t_sf(|t|, df).
/// errors: zero_variance propagated.
CorrelationTest cor_test(const AlignedPair& pair);

/// Cross-correlation over lags -max_lag..max_lag.
/// errors: zero_variance; max_lag >= n - 2 or < 0 -> lag_exceeds_data.
CrossCorrelogram ccf(const AlignedPair& pair, int max_lag);

/// p-values below this floor are rendered as "< 2.2e-16".
inline constexpr double kPValueDisplayFloor = 2.2e-16;

/// "< 2.2e-16" when clamped, otherwise the value itself.
std::string format_p_value(double p);

}  // namespace tslab
