#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "efimov/log_scalar.hpp"
#include "efimov/rng.hpp"

using efimov::LogScalar;
using efimov::log_sum_exp;

TEST_CASE("log_sum_exp basics", "[logscalar]") {
    CHECK(log_sum_exp(0.0, 0.0) == Catch::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(log_sum_exp(-1000.0, 0.0) == Catch::Approx(0.0).margin(1e-15));
    // safe-magnitude direct evaluation
    CHECK(log_sum_exp(3.0, 5.0) == Catch::Approx(std::log(std::exp(3.0) + std::exp(5.0))).epsilon(1e-15));
    CHECK(log_sum_exp(5.0, 3.0) == log_sum_exp(3.0, 5.0));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(log_sum_exp(-inf, 2.5) == 2.5);
}

TEST_CASE("LogScalar round trip", "[logscalar]") {
    // Round trip is 1e-14 over moderate exponents; at the edges of double
    // range the stored log itself is rounded, so the achievable bound is
    // ulp-scale, |ln x| * 2^-52.
    for (double x : {1.0, -3.5, 6.25e-3, 9.87e11, 2.7e-200, -8.1e155, 1e-300, 0.0}) {
        const LogScalar s = LogScalar::from_double(x);
        if (x == 0.0) {
            CHECK(s.is_zero());
            CHECK(s.to_double() == 0.0);
            continue;
        }
        const double tol = std::max(1e-14, std::fabs(std::log(std::fabs(x))) * std::pow(2.0, -52));
        CHECK(std::fabs(s.to_double() - x) <= tol * std::fabs(x));
        if (std::fabs(std::log(std::fabs(x))) < 100.0)
            CHECK(s.to_double() == Catch::Approx(x).epsilon(1e-14));
    }
}

TEST_CASE("LogScalar arithmetic", "[logscalar]") {
    const LogScalar a = LogScalar::from_double(-2.0);
    const LogScalar b = LogScalar::from_double(3.0);
    CHECK((a * b).to_double() == Catch::Approx(-6.0).epsilon(1e-14));
    CHECK((a + b).to_double() == Catch::Approx(1.0).epsilon(1e-13));
    CHECK((b + a).to_double() == Catch::Approx(1.0).epsilon(1e-13));
    CHECK((a - a).is_zero());
    CHECK((a / b).to_double() == Catch::Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(LogScalar::from_log(4.0).sqrt().log_magnitude == Catch::Approx(2.0));

    // addition far outside double range must stay finite
    const LogScalar huge1 = LogScalar::from_log(1e6);
    const LogScalar huge2 = LogScalar::from_log(1e6 - 3.0);
    const LogScalar sum = huge1 + huge2;
    CHECK(std::isfinite(sum.log_magnitude));
    CHECK(sum.log_magnitude == Catch::Approx(1e6 + std::log1p(std::exp(-3.0))).epsilon(1e-15));
    const LogScalar tiny = LogScalar::from_log(-1e6);
    CHECK((huge1 + tiny).log_magnitude == Catch::Approx(1e6));
}

TEST_CASE("LogScalar multiplication chains stay associative", "[logscalar]") {
    efimov::Rng rng(20240117u);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<LogScalar> xs;
        for (int i = 0; i < 1000; ++i)
            xs.push_back(LogScalar(rng.uniform() < 0.5 ? -1 : 1, rng.uniform(-500.0, 500.0)));
        LogScalar fwd = LogScalar::one(), bwd = LogScalar::one();
        for (const auto& x : xs) fwd = fwd * x;
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) bwd = *it * bwd;
        REQUIRE(fwd.sign == bwd.sign);
        CHECK(std::fabs(fwd.log_magnitude - bwd.log_magnitude) < 1e-12 * std::max(1.0, std::fabs(fwd.log_magnitude)));
    }
}
