#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "efimov/eigensolver.hpp"
#include "efimov/matrix.hpp"
#include "efimov/rng.hpp"

using efimov::Matrix;
using efimov::symmetric_eigen;

namespace {

Matrix random_symmetric(int n, efimov::Rng& rng) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-1.0, 1.0);
    return a;
}

}  // namespace

TEST_CASE("symmetric_eigen trivial spectra", "[eigen]") {
    CHECK(symmetric_eigen(Matrix::identity(2)).values == std::vector<double>{1.0, 1.0});
    Matrix swap(2, 2);
    swap(0, 1) = swap(1, 0) = 1.0;
    const auto r = symmetric_eigen(swap);
    CHECK(r.values[0] == Catch::Approx(-1.0).epsilon(1e-14));
    CHECK(r.values[1] == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symmetric_eigen reconstructs a random matrix", "[eigen]") {
    efimov::Rng rng(7u);
    const int n = 50;
    const Matrix a = random_symmetric(n, rng);
    const auto r = symmetric_eigen(a, true);

    Matrix recon(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += r.vectors(i, k) * r.values[k] * r.vectors(j, k);
            recon(i, j) = s;
        }
    CHECK((recon - a).frobenius_norm() / a.frobenius_norm() < 1e-9);

    // per-pair residual ||A v - lambda v|| <= 1e-10 ||A||
    const double norm_a = std::max(std::fabs(r.values.front()), std::fabs(r.values.back()));
    for (int k = 0; k < n; ++k) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = r.vectors(i, k);
        const auto av = a.apply(v);
        double res = 0.0;
        for (int i = 0; i < n; ++i) res += (av[i] - r.values[k] * v[i]) * (av[i] - r.values[k] * v[i]);
        CHECK(std::sqrt(res) <= 1e-10 * norm_a);
    }
}

TEST_CASE("spectrum is invariant under orthogonal conjugation", "[eigen]") {
    efimov::Rng rng(11u);
    const int n = 30;
    Matrix a = random_symmetric(n, rng);
    a *= 1.0 / a.frobenius_norm();  // ||A|| ~ 1 scale
    // an orthogonal Q: eigenvector matrix of another random symmetric matrix
    const Matrix q = symmetric_eigen(random_symmetric(n, rng), true).vectors;
    Matrix conj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) s += q(i, k) * a(k, m) * q(j, m);
            conj(i, j) = s;
        }
    // fold the conjugation roundoff before the solve
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) conj(i, j) = conj(j, i) = 0.5 * (conj(i, j) + conj(j, i));
    const auto ev_a = symmetric_eigen(a).values;
    const auto ev_c = symmetric_eigen(conj).values;
    for (int k = 0; k < n; ++k) CHECK(ev_c[k] == Catch::Approx(ev_a[k]).margin(1e-9));
}

TEST_CASE("asymmetric input is rejected", "[eigen]") {
    Matrix bad(3, 3);
    bad(0, 1) = 1.0;
    bad(1, 0) = 1.0 + 1e-6;
    CHECK_THROWS_AS(symmetric_eigen(bad), std::invalid_argument);
}

TEST_CASE("singular values", "[eigen]") {
    Matrix d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = -2.0;
    d(2, 2) = 0.1;
    const auto sv = efimov::singular_values(d);
    CHECK(sv[0] == Catch::Approx(3.0).epsilon(1e-12));
    CHECK(sv[1] == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(sv[2] == Catch::Approx(0.1).epsilon(1e-10));

    efimov::Rng rng(3u);
    Matrix rect(8, 5);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 5; ++j) rect(i, j) = rng.uniform(-1.0, 1.0);
    const auto s1 = efimov::singular_values(rect);
    const auto s2 = efimov::singular_values(rect.transposed());
    REQUIRE(s1.size() == s2.size());
    for (std::size_t k = 0; k < s1.size(); ++k) CHECK(s1[k] == Catch::Approx(s2[k]).margin(1e-11));
}
