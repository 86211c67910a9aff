#include <doctest.h>

#include <cmath>

#include "ris/errors.hpp"
#include "ris/numerics.hpp"

using namespace ris;
using namespace ris::numerics;

namespace {
bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace

// reference values from mpmath at 30 digits
TEST_CASE("bessel_k against high-precision references") {
    CHECK(rel_close(bessel_k(1, 2.0), 0.139865881816522427, 1e-13));
    CHECK(rel_close(bessel_k(0, 1.0), 0.421024438240708333, 1e-13));
    CHECK(rel_close(bessel_k(5, 3.0), 0.937773602386808031, 1e-12));
    CHECK(rel_close(bessel_k(3, 50.0), 3.72793677382621143e-23, 1e-12));
    CHECK(rel_close(bessel_k(2, 0.01), 19999.5000683894106, 1e-12));
}

TEST_CASE("bessel_k domain") {
    CHECK_THROWS_AS(bessel_k(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(-1, 1.0), std::domain_error);
}

TEST_CASE("scaled_bessel_k tends to one half and matches the plain form") {
    CHECK(std::abs(scaled_bessel_k(3, 1e-8) - 0.5) < 1e-12);
    const double x = 2.0;
    // (x/2)^1 K_1(x) / Gamma(1)
    CHECK(rel_close(scaled_bessel_k(1, x), bessel_k(1, x), 1e-13));
    // (x/2)^5 K_5(x) / 4!
    CHECK(rel_close(scaled_bessel_k(5, 3.0), std::pow(1.5, 5) * 0.937773602386808031 / 24.0, 1e-12));
}

TEST_CASE("regularized incomplete gamma") {
    CHECK(rel_close(regularized_gamma_p(1.60995, 0.5), 0.168477370208560911, 1e-12));
    CHECK(rel_close(regularized_gamma_p(30.0, 25.0), 0.182103915977455110, 1e-12));
    CHECK(rel_close(regularized_gamma_q(5.0, 20.0), 1.69447439300673839e-5, 1e-12));
    CHECK(std::abs(regularized_gamma_p(2.5, 3.0) + regularized_gamma_q(2.5, 3.0) - 1.0) < 1e-14);
    CHECK(regularized_gamma_p(2.0, 0.0) == 0.0);
}

TEST_CASE("digamma") {
    CHECK(rel_close(digamma(3.21990), 1.00610251248667494, 1e-13));
    CHECK(rel_close(digamma(0.1), -10.4237549404110768, 1e-13));
    CHECK(rel_close(digamma(50.0), 3.90198967342789220, 1e-14));
    CHECK(rel_close(digamma(1.0), -kEulerGamma, 1e-14));
}

TEST_CASE("erf") { CHECK(rel_close(ris::numerics::erf(1.0), 0.842700792949714869, 1e-15)); }

TEST_CASE("semi-infinite quadrature") {
    const auto r = integrate_semi_infinite([](double x) { return std::exp(-x); });
    CHECK(std::abs(r.value - 1.0) < 1e-12);
    CHECK(r.error_estimate >= 0.0);
    const auto c = integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); });
    CHECK(std::abs(c.value - kPi / 2.0) < 1e-10);
    // log singularity at the origin
    const auto l = integrate_semi_infinite([](double x) { return -std::log(x) * std::exp(-x); });
    CHECK(std::abs(l.value - kEulerGamma) < 1e-9);
}

TEST_CASE("finite quadrature and reversed limits") {
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(std::abs(r.value - 2.0) < 1e-13);
    const auto s = integrate([](double x) { return std::sin(x); }, kPi, 0.0);
    CHECK(std::abs(s.value + 2.0) < 1e-13);
}

TEST_CASE("quadrature reports non-convergence") {
    QuadratureSpec spec;
    spec.max_subdivisions = 3;
    spec.relative_tolerance = 1e-15;
    spec.absolute_tolerance = 0.0;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, spec), NonConvergence);
}

TEST_CASE("symmetric matrix algebra") {
    SymmetricMatrix a(2);
    a.set(0, 1, 3.0);
    CHECK(a(1, 0) == 3.0);
    a.set(0, 0, 1.0);
    a.set(1, 1, 2.0);
    const SymmetricMatrix i = SymmetricMatrix::identity(2);
    CHECK(a.dot(i) == doctest::Approx(3.0));
    const double x[] = {1.0, 2.0};
    CHECK(a.quadratic_form(x) == doctest::Approx(1.0 + 12.0 + 8.0));
    const SymmetricMatrix o = SymmetricMatrix::outer(x);
    CHECK(o(0, 1) == 2.0);
    const auto e = eig_symmetric(a);
    CHECK(e.values(0) >= e.values(1));
    CHECK(e.values.sum() == doctest::Approx(3.0));
}

TEST_CASE("gaussian sampler covariance and psd check") {
    Eigen::MatrixXd m(2, 2);
    m << 2.0, 1.0, 1.0, 2.0;
    const GaussianSampler s{SymmetricMatrix(m)};
    Rng rng(7, 0);
    double sxx = 0, sxy = 0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        const auto v = s(rng);
        sxx += v[0] * v[0];
        sxy += v[0] * v[1];
    }
    CHECK(std::abs(sxx / n - 2.0) < 0.03);
    CHECK(std::abs(sxy / n - 1.0) < 0.03);

    Eigen::MatrixXd bad(2, 2);
    bad << 1.0, 0.0, 0.0, -1.0;
    CHECK_THROWS_AS(GaussianSampler{SymmetricMatrix(bad)}, NotPsd);
}
