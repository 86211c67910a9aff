#include <doctest.h>

#include <cmath>

#include "ris/channel.hpp"
#include "ris/numerics.hpp"
#include "ris/optim.hpp"

using namespace ris;
using numerics::kPi;

TEST_CASE("unit conversions") {
    CHECK(dbm_to_mw(-70.0) == doctest::Approx(1e-7));
    CHECK(mw_to_dbm(1.0) == doctest::Approx(0.0));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    CHECK(wrap_phase(-0.5) == doctest::Approx(2 * kPi - 0.5));
    CHECK(wrap_phase(-1e-300) < 2 * kPi);
    CHECK(wrap_phase(7.0) == doctest::Approx(7.0 - 2 * kPi));
}

TEST_CASE("sinr budget per scheme") {
    SystemConfig cfg;
    cfg.p1_mw = 2.0;
    cfg.p2_mw = 4.0;
    cfg.omega = 1e-4;
    cfg.noise_mw = 1e-7;
    cfg.nu = 1.0;
    const SinrBudget b = sinr_budget(cfg);
    CHECK(b.rho1 == doctest::Approx(4.0 / (1e-4 * 2.0 + 1e-7)));
    CHECK(b.rho2 == doctest::Approx(2.0 / (1e-4 * 4.0 + 1e-7)));
    cfg.scheme = Scheme::Two;
    const SinrBudget s = sinr_budget(cfg);
    CHECK(s.rho1 == doctest::Approx(4.0 / 1e-7));
    cfg.noise_mw = 0.0;
    CHECK_THROWS_AS(sinr_budget(cfg), std::invalid_argument);
}

TEST_CASE("config validation names the field") {
    SystemConfig cfg;
    cfg.nu = 1.5;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("nu"), std::invalid_argument);
    cfg.nu = 0.0;
    cfg.phase_error = PhaseErrorModel::uniform(4.0);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("co-phasing gives the coherent sum and beats perturbations") {
    SystemConfig cfg;
    cfg.L = 6;
    Rng rng(3, 0);
    const ChannelRealization ch = sample_channels(cfg, rng);
    const PhaseVector phi = optim::optimal_phase_reciprocal(ch);
    const SinrBudget b{2.0, 3.0};
    const SinrPair s = sinr_reciprocal(ch, phi, b);
    double coherent = 0.0;
    for (int l = 0; l < cfg.L; ++l) coherent += std::abs(ch.h[l]) * std::abs(ch.g[l]);
    CHECK(s.gamma1 == doctest::Approx(2.0 * coherent * coherent).epsilon(1e-12));
    CHECK(s.gamma2 == doctest::Approx(3.0 * coherent * coherent).epsilon(1e-12));
    for (int trial = 0; trial < 50; ++trial) {
        PhaseVector p = phi;
        for (double& x : p) x += 0.3 * (rng.uniform() - 0.5);
        CHECK(sinr_reciprocal(ch, p, b).gamma1 <= s.gamma1 * (1 + 1e-12));
    }
}

TEST_CASE("phase errors shift the phases") {
    SystemConfig cfg;
    cfg.L = 3;
    Rng rng(5, 1);
    const ChannelRealization ch = sample_channels(cfg, rng);
    const PhaseVector phi = optim::optimal_phase_reciprocal(ch);
    const std::vector<double> eps{0.1, -0.2, 0.3};
    PhaseVector shifted = phi;
    for (int l = 0; l < 3; ++l) shifted[l] += eps[l];
    const SinrBudget b{1.0, 1.0};
    CHECK(sinr_with_phase_error(ch, phi, b, eps).gamma1 == doctest::Approx(sinr_reciprocal(ch, shifted, b).gamma1));
}

TEST_CASE("non-reciprocal cascades use the directional vectors") {
    SystemConfig cfg;
    cfg.L = 4;
    cfg.reciprocity = Reciprocity::NonReciprocal;
    Rng rng(9, 0);
    const ChannelRealization ch = sample_channels(cfg, rng);
    const auto v1 = cascade_user1(ch);
    const auto v2 = cascade_user2(ch);
    CHECK(std::abs(v1[2] - ch.h_r[2] * ch.g_t[2]) < 1e-15);
    CHECK(std::abs(v2[2] - ch.g_r[2] * ch.h_t[2]) < 1e-15);
}

TEST_CASE("channel coefficients are CN(0, sigma2)") {
    SystemConfig cfg;
    cfg.L = 1;
    cfg.sigma2 = 2.5;
    double s = 0.0, re = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        Rng rng(11, i);
        const auto ch = sample_channels(cfg, rng);
        s += std::norm(ch.h[0]);
        re += ch.h[0].real();
    }
    CHECK(std::abs(s / n - 2.5) < 5.0 * 2.5 / std::sqrt(n));
    CHECK(std::abs(re / n) < 5.0 * std::sqrt(1.25 / n));
}

TEST_CASE("phase error draws") {
    Rng rng(2, 0);
    CHECK(draw_phase_errors(PhaseErrorModel::none(), 4, rng) == std::vector<double>(4, 0.0));
    const auto u = draw_phase_errors(PhaseErrorModel::uniform(0.5), 1000, rng);
    for (double e : u) {
        REQUIRE(e >= -0.5);
        REQUIRE(e <= 0.5);
    }
    // von Mises: E[cos(x - mu)] = I1(kappa) / I0(kappa); kappa = 2 gives 0.697775
    double c = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = sample_von_mises(0.7, 2.0, rng);
        REQUIRE(x > -kPi);
        REQUIRE(x <= kPi);
        c += std::cos(x - 0.7);
    }
    CHECK(std::abs(c / n - 0.697774657964007982) < 0.005);
}
