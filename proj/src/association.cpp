#include "tslab/association.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "tslab/error.hpp"
#include "tslab/student_t.hpp"

namespace tslab {

namespace {

void require_variance(const Eigen::VectorXd& v, const char* which) {
    if ((v.array() - v[0]).abs().maxCoeff() == 0.0)
        throw Error(Errc::zero_variance, std::string(which) + " sequence is constant");
}

}  // namespace

double pearson_r(const AlignedPair& pair) {
    require_variance(pair.x, "x");
    require_variance(pair.y, "y");
    const Eigen::ArrayXd dx = pair.x.array() - pair.x.mean();
    const Eigen::ArrayXd dy = pair.y.array() - pair.y.mean();
    return (dx * dy).sum() / std::sqrt(dx.square().sum() * dy.square().sum());
}

CorrelationTest cor_test(const AlignedPair& pair) {
    CorrelationTest test;
    test.n = pair.n();
    test.df = static_cast<int>(pair.n()) - 2;
    test.r = pearson_r(pair);

    if (std::abs(test.r) >= 1.0) {
        test.degenerate = true;
        test.t = std::copysign(std::numeric_limits<double>::infinity(), test.r);
        test.p = 0.0;
        return test;
    }
    test.t = test.r * std::sqrt(test.df / (1.0 - test.r * test.r));
    test.p = 2.0 * student_t_sf(std::abs(test.t), test.df);
    return test;
}

CrossCorrelogram ccf(const AlignedPair& pair, int max_lag) {
    const Eigen::Index n = pair.n();
    if (max_lag < 0 || n < static_cast<Eigen::Index>(max_lag) + 3)
        throw Error(Errc::lag_exceeds_data,
                    "max lag " + std::to_string(max_lag) + " with only " + std::to_string(n) +
                        " paired months");
    require_variance(pair.x, "x");
    require_variance(pair.y, "y");

    const Eigen::ArrayXd dx = pair.x.array() - pair.x.mean();
    const Eigen::ArrayXd dy = pair.y.array() - pair.y.mean();
    const double denom = std::sqrt(dx.square().sum() * dy.square().sum());

    CrossCorrelogram gram;
    gram.max_lag = max_lag;
    gram.r.resize(2 * max_lag + 1);
    for (int k = -max_lag; k <= max_lag; ++k) {
        // sum over t with both x[t+k] and y[t] in range; the shared 1/n factor
        // cancels against the lag-0 normalization
        const Eigen::Index lo = std::max<Eigen::Index>(0, -k);
        const Eigen::Index hi = std::min<Eigen::Index>(n, n - k);  // exclusive
        const Eigen::Index len = hi - lo;
        gram.r[k + max_lag] = (dx.segment(lo + k, len) * dy.segment(lo, len)).sum() / denom;
    }
    return gram;
}

CrossCorrelogram::Peak CrossCorrelogram::peak() const {
    Peak best{0, at(0)};
    for (int k = -max_lag; k <= max_lag; ++k) {
        const double v = at(k);
        const bool stronger =
            std::abs(v) > std::abs(best.value) ||
            (std::abs(v) == std::abs(best.value) &&
             (std::abs(k) < std::abs(best.lag) || (std::abs(k) == std::abs(best.lag) && k > best.lag)));
        if (stronger) best = Peak{k, v};
    }
    return best;
}

std::string format_p_value(double p) {
    if (p < kPValueDisplayFloor) return "< 2.2e-16";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", p);
    return buf;
}

}  // namespace tslab
