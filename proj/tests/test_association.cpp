#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "tslab/association.hpp"
#include "tslab/error.hpp"

using namespace tslab;

namespace {

AlignedPair make_pair(std::vector<double> x, std::vector<double> y) {
    AlignedPair p;
    p.x = Eigen::Map<Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
    p.y = Eigen::Map<Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
    p.first = MonthStamp{2009, 1};
    return p;
}

AlignedPair random_pair(unsigned seed, Eigen::Index n) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    AlignedPair p;
    p.x.resize(n);
    p.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        p.x[i] = 3.0 * noise(rng) + 0.1 * static_cast<double>(i);
        p.y[i] = noise(rng) - 0.5 * p.x[i];
    }
    p.first = MonthStamp{2009, 1};
    return p;
}

}  // namespace

TEST_CASE("pearson matches the exact rational oracle") {
    // Sxy = 5, Sxx = 14/3, Syy = 6 -> r = 5 / sqrt(28), worked by hand
    const AlignedPair p = make_pair({1, 2, 4}, {2, 2, 5});
    CHECK(pearson_r(p) == doctest::Approx(5.0 / (2.0 * std::sqrt(7.0))).epsilon(1e-14));
}

TEST_CASE("pearson matches the plain-loop oracle on random data") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const AlignedPair p = random_pair(seed, 120);
        std::vector<double> x(p.x.data(), p.x.data() + p.x.size());
        std::vector<double> y(p.y.data(), p.y.data() + p.y.size());
        CHECK(pearson_r(p) == doctest::Approx(oracle::pearson(x, y)).epsilon(1e-13));
    }
}

TEST_CASE("pearson self-correlation is one") {
    const AlignedPair p = random_pair(11, 88);
    AlignedPair self;
    self.x = p.x;
    self.y = p.x;
    self.first = p.first;
    CHECK(pearson_r(self) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pearson affine invariance and sign flip") {
    const AlignedPair p = random_pair(23, 60);
    const double base = pearson_r(p);
    for (double a : {0.25, 3.0, 1e4}) {
        AlignedPair scaled = p;
        scaled.x = (a * p.x.array() + 17.5).matrix();
        CHECK(std::abs(pearson_r(scaled) - base) <= 1e-12);
        scaled.x = (-a * p.x.array() + 2.0).matrix();
        CHECK(std::abs(pearson_r(scaled) + base) <= 1e-12);
    }
}

TEST_CASE("pearson rejects constant input") {
    try {
        pearson_r(make_pair({1, 1, 1, 1}, {1, 2, 3, 4}));
        FAIL("expected zero_variance");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::zero_variance);
    }
}

TEST_CASE("cor_test on an orthogonal pair gives t = 0, p = 1") {
    const AlignedPair p = make_pair({1, 2, 3, 4}, {1, -1, -1, 1});
    const CorrelationTest test = cor_test(p);
    CHECK(test.r == 0.0);
    CHECK(test.t == 0.0);
    CHECK(test.p == 1.0);
    CHECK(test.df == 2);
}

TEST_CASE("cor_test is consistent with its own r and df") {
    for (unsigned seed : {5u, 6u}) {
        const AlignedPair p = random_pair(seed, 88);
        const CorrelationTest test = cor_test(p);
        CHECK(test.df == 86);
        const double recomputed = test.r * std::sqrt(test.df / (1.0 - test.r * test.r));
        CHECK(std::abs(recomputed - test.t) <= 1e-9);
        CHECK(test.p == doctest::Approx(2.0 * oracle::student_t_sf(std::abs(test.t), test.df))
                            .epsilon(1e-9));
    }
}

TEST_CASE("cor_test flags a perfect linear relation") {
    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(10, 0.0, 9.0);
    AlignedPair p;
    p.x = x;
    p.y = 2.0 * x.array() + 1.0;
    p.first = MonthStamp{2009, 1};
    const CorrelationTest test = cor_test(p);
    CHECK(test.degenerate);
    CHECK(test.p == 0.0);
    CHECK(std::isinf(test.t));
}

TEST_CASE("ccf of a series with itself") {
    const AlignedPair p = random_pair(31, 90);
    AlignedPair self;
    self.x = p.x;
    self.y = p.x;
    self.first = p.first;
    const CrossCorrelogram gram = ccf(self, 20);
    CHECK(gram.r.size() == 41);
    CHECK(gram.at(0) == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 1; k <= 20; ++k) CHECK(gram.at(k) == gram.at(-k));
    const auto peak = gram.peak();
    CHECK(peak.lag == 0);
}

TEST_CASE("ccf argument antisymmetry") {
    const AlignedPair p = random_pair(41, 70);
    AlignedPair swapped;
    swapped.x = p.y;
    swapped.y = p.x;
    swapped.first = p.first;
    const CrossCorrelogram fwd = ccf(p, 15);
    const CrossCorrelogram rev = ccf(swapped, 15);
    for (int k = -15; k <= 15; ++k) CHECK(fwd.at(k) == rev.at(-k));
}

TEST_CASE("ccf stays within the correlation bound at every lag") {
    for (unsigned seed : {51u, 52u, 53u}) {
        const AlignedPair p = random_pair(seed, 64);
        const CrossCorrelogram gram = ccf(p, 30);
        for (int k = -30; k <= 30; ++k) CHECK(std::abs(gram.at(k)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("ccf matches a hand-rolled shifted-product sum") {
    const AlignedPair p = random_pair(61, 40);
    const CrossCorrelogram gram = ccf(p, 5);
    const double mx = p.x.mean(), my = p.y.mean();
    double sxx = 0.0, syy = 0.0;
    for (Eigen::Index i = 0; i < p.n(); ++i) {
        sxx += (p.x[i] - mx) * (p.x[i] - mx);
        syy += (p.y[i] - my) * (p.y[i] - my);
    }
    for (int k = -5; k <= 5; ++k) {
        double sum = 0.0;
        for (Eigen::Index t = 0; t < p.n(); ++t) {
            const Eigen::Index shifted = t + k;
            if (shifted >= 0 && shifted < p.n()) sum += (p.x[shifted] - mx) * (p.y[t] - my);
        }
        CHECK(gram.at(k) == doctest::Approx(sum / std::sqrt(sxx * syy)).epsilon(1e-13));
    }
}

TEST_CASE("ccf detects a known shift") {
    // y is x delayed by 4 months, so x[t+(-4)] pairs with y[t]
    std::mt19937 rng(77);
    std::normal_distribution<double> noise(0.0, 1.0);
    const Eigen::Index n = 200;
    Eigen::VectorXd base(n + 4);
    for (Eigen::Index i = 0; i < n + 4; ++i) base[i] = noise(rng);
    AlignedPair p;
    p.x = base.segment(4, n);
    p.y = base.segment(0, n);
    p.first = MonthStamp{2009, 1};
    const auto peak = ccf(p, 10).peak();
    CHECK(peak.lag == -4);
    CHECK(peak.value > 0.9);
}

TEST_CASE("ccf lag bounds") {
    const AlignedPair p = random_pair(71, 20);
    CHECK_NOTHROW(ccf(p, 17));
    try {
        ccf(p, 18);
        FAIL("expected lag_exceeds_data");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::lag_exceeds_data);
    }
    CHECK_THROWS_AS(ccf(p, -1), Error);
    CHECK(ccf(p, 0).r.size() == 1);
}

TEST_CASE("lag labels are year fractions") {
    CHECK(CrossCorrelogram::year_fraction(3) == doctest::Approx(0.25));
    CHECK(CrossCorrelogram::year_fraction(-9) == doctest::Approx(-0.75));
}

TEST_CASE("p-value display clamps below the floor") {
    CHECK(format_p_value(1e-20) == "< 2.2e-16");
    CHECK(format_p_value(0.6353168) == "0.6353");
    CHECK(format_p_value(0.01357) == "0.01357");
    CHECK(format_p_value(1.0) == "1");
}
