#include <doctest.h>

#include <cmath>

#include "ris/analytic.hpp"

using namespace ris;
using namespace ris::analytic;
using numerics::kPi;

namespace {
bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace

TEST_CASE("single-element exact outage") {
    // 1 - 2 K1(2) at gamma_th = rho = sigma2 = 1
    CHECK(rel_close(outage_exact_L1(1.0, 1.0, 1.0), 1.0 - 2.0 * 0.139865881816522427, 1e-13));
    CHECK(outage_exact_L1(0.0, 1.0, 1.0) == 0.0);
    CHECK(outage_exact_L1(1.0, 1e30, 1.0) < 1e-25);
    CHECK(outage_exact_L1(1.0, 1.0, 1.0) == doctest::Approx(outage_exact(1, 1.0, 1.0, 1.0)));
}

TEST_CASE("exact cascade-sum CDF by inversion") {
    CHECK(rel_close(cascade_sum_cdf(2, 1.0, 1.0), 0.287546697970470546, 1e-10));
    CHECK(rel_close(cascade_sum_cdf(2, 0.5, 1.0), 0.0619385001366628296, 1e-10));
    // L = 1 against the Bessel closed form: P[Z <= z] = outage at gamma_th = z^2, rho = 1
    CHECK(rel_close(cascade_sum_cdf(1, 0.7, 1.3), outage_exact_L1(0.49, 1.0, 1.3), 1e-10));
    // deep tail stays positive and monotone
    double prev = 0.0;
    for (double z : {1e-4, 1e-3, 1e-2, 1e-1}) {
        const double f = cascade_sum_cdf(4, z, 1.0);
        CHECK(f > prev);
        prev = f;
    }
}

TEST_CASE("gamma and clt fits") {
    const GammaApproxParams p = gamma_approx_params(1.0);
    CHECK(p.k == doctest::Approx(1.60995).epsilon(1e-5));
    CHECK(p.k * p.theta == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    // scale invariance of the shape
    CHECK(gamma_approx_params(7.0).k == doctest::Approx(p.k).epsilon(1e-12));
    const CltParams c = clt_params(8, 1.0);
    CHECK(c.mu == doctest::Approx(8.0 * kPi / 4.0));
    CHECK(c.eta > 0.0);
    CHECK(outage_gamma(4, 1.0, 1.0, p) >= 0.0);
    CHECK(outage_gamma(4, 1.0, 1.0, p) <= 1.0);
    CHECK(outage_clt(1.0, 1e-12, c) <= 1.0);
}

TEST_CASE("kl divergence of the gamma fit") {
    const double kl = kl_divergence_gamma_fit(1.0);
    CHECK(kl > 1.6e-4);
    CHECK(kl < 3.0e-4);
    CHECK(kl_divergence_gamma_fit(100.0) == doctest::Approx(kl).epsilon(1e-3));
}

TEST_CASE("spectral efficiency by quadrature") {
    CHECK(rel_close(se_reciprocal(1, 10.0, 1.0), 2.45796222325475551, 1e-9));
    // all mass at zero gives zero rate
    CHECK(spectral_efficiency([](double) { return 1.0; }) == doctest::Approx(0.0));
    CHECK(se_reciprocal(4, 100.0, 1.0) > se_reciprocal(2, 100.0, 1.0));
}

TEST_CASE("uniform phase errors reduce to a single cascade of order L") {
    // L = 1 with a fully random phase is the error-free single element
    CHECK(rel_close(outage_phase_error_uniform_pi(1, 1.0, 3.0, 1.0), outage_exact_L1(1.0, 3.0, 1.0), 1e-9));
    CHECK(outage_phase_error_uniform_pi(16, 1.0, 100.0, 1.0) > outage_gamma(16, 1.0, 100.0, gamma_approx_params(1.0)));
    CHECK(se_phase_error_uniform_pi(4, 100.0, 1.0) < se_reciprocal(4, 100.0, 1.0));
}

TEST_CASE("element-count deltas") {
    const double k = gamma_approx_params(1.0).k;
    CHECK(delta_p(2, 16, k) == doctest::Approx(19.3101).epsilon(1e-4));
    CHECK(delta_p(16, 64, k) == doctest::Approx(12.1687).epsilon(1e-4));
    CHECK(delta_r(2, 16, k) == doctest::Approx(delta_p(2, 16, k) / (10.0 * std::log10(2.0))).epsilon(1e-12));
}

TEST_CASE("scheme crossover power") {
    const auto b2 = scheme_crossover_power(2, 1e-4, 0.0, 1e-10, 1.0);
    CHECK(10.0 * std::log10(b2.p_mw) == doctest::Approx(17.4956).epsilon(1e-4));
    CHECK(b2.scheme1_above);
    const auto b64 = scheme_crossover_power(64, 1e-4, 0.0, 1e-10, 1.0);
    CHECK(10.0 * std::log10(b64.p_mw) == doctest::Approx(-13.9832).epsilon(1e-4));
    // at the boundary the two asymptotes meet
    const double p = scheme_crossover_power(16, 1e-4, 0.0, 1e-10, 1.0).p_mw;
    CHECK(asymptotic_se(16, p, 1e-4, 0.0, 1e-10, 1.0, Scheme::One) ==
          doctest::Approx(asymptotic_se(16, p, 1e-4, 0.0, 1e-10, 1.0, Scheme::Two)).epsilon(1e-9));
    const auto f = scheme_crossover_power(16, 1e-4, 1.0, 1e-10, 1.0);
    CHECK_FALSE(f.scheme1_above);
}

TEST_CASE("asymptotes accept only the interference endpoints") {
    CHECK_THROWS_AS(asymptotic_outage(2, 1.0, 100.0, 1e-4, 0.5, 1e-7, 1.0), std::domain_error);
    CHECK_THROWS_AS(asymptotic_se(2, 100.0, 1e-4, 0.2, 1e-7, 1.0, Scheme::One), std::domain_error);
    CHECK_THROWS_AS(scheme_crossover_power(2, 1e-4, 0.3, 1e-7, 1.0), std::domain_error);
    // nu = 1 floors at rho = 1/omega
    CHECK(asymptotic_outage(1, 1.0, 1e9, 1e-4, 1.0, 1e-7, 1.0) == doctest::Approx(outage_exact_L1(1.0, 1e4, 1.0)));
}

TEST_CASE("max/sum sandwich around the exact outage") {
    for (int L : {2, 4}) {
        for (double rho : {1e6, 1e7, 1e8}) {
            const double exact = outage_exact(L, 1.0, rho, 1.0);
            const double lower = std::pow(outage_exact_L1(1.0 / (L * L), rho, 1.0), L);
            const double upper = std::pow(outage_exact_L1(1.0, rho, 1.0), L);
            CHECK(lower <= exact);
            CHECK(exact <= upper);
        }
    }
}

TEST_CASE("the gamma fit leaves the sandwich deep in the tail") {
    // its lower-tail exponent is L k instead of L, so it overestimates deep outage
    const double upper = std::pow(outage_exact_L1(1.0, 1e6, 1.0), 2);
    CHECK(outage_gamma(2, 1.0, 1e6, gamma_approx_params(1.0)) > upper);
}
