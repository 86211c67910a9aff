#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ris/errors.hpp"
#include "ris/optim.hpp"

using namespace ris;
using namespace ris::optim;

namespace {

ChannelRealization draw(int L, std::uint64_t seed) {
    SystemConfig cfg;
    cfg.L = L;
    cfg.reciprocity = Reciprocity::NonReciprocal;
    Rng rng(seed, 0);
    return sample_channels(cfg, rng);
}

const SinrBudget kBudget{1e4, 1e4};

}  // namespace

TEST_CASE("quadratic forms reproduce both SINRs") {
    const auto ch = draw(5, 1);
    const QuadraticFormPair f = build_quadratic_forms(ch, kBudget);
    Rng rng(1, 1);
    for (int t = 0; t < 10; ++t) {
        const PhaseVector phi = baseline_phases(ch, Method::Random, rng);
        const auto x = phases_to_vector(phi);
        const SinrPair s = sinr_nonreciprocal(ch, phi, kBudget);
        CHECK(f.F1.quadratic_form(x) == doctest::Approx(s.gamma1).epsilon(1e-12));
        CHECK(f.F2.quadratic_form(x) == doctest::Approx(s.gamma2).epsilon(1e-12));
    }
}

TEST_CASE("single element: the relaxation is the phase-free SINR pair") {
    const auto ch = draw(1, 2);
    const QuadraticFormPair f = build_quadratic_forms(ch, kBudget);
    const SdpResult r = sdp_maxmin_joint(f);
    const SinrPair s = sinr_nonreciprocal(ch, PhaseVector{0.3}, kBudget);
    CHECK(r.t_star == doctest::Approx(s.min()).epsilon(1e-6));
}

TEST_CASE("joint solve and bisection agree and bound every rank-one point") {
    for (std::uint64_t seed = 10; seed < 20; ++seed) {
        const auto ch = draw(6, seed);
        const QuadraticFormPair f = build_quadratic_forms(ch, kBudget);
        const SdpResult joint = sdp_maxmin_joint(f);
        const SdpResult bis = sdp_maxmin(f);
        CHECK(std::abs(joint.t_star - bis.t_star) <= 1e-4 * joint.t_star);
        // A_star is feasible: PSD and unit trace on every pair
        const auto e = numerics::eig_symmetric(joint.A_star);
        CHECK(e.values(e.values.size() - 1) >= -1e-9 * e.values(0));
        for (int l = 0; l < 6; ++l) {
            CHECK(joint.A_star(2 * l, 2 * l) + joint.A_star(2 * l + 1, 2 * l + 1) == doctest::Approx(1.0).epsilon(1e-9));
        }
        const double achieved = std::min(f.F1.dot(joint.A_star), f.F2.dot(joint.A_star));
        CHECK(achieved <= joint.t_star * (1 + 1e-12));
        CHECK(achieved >= joint.t_star * (1 - 1e-6));
        Rng rng(seed, 1);
        for (int t = 0; t < 20; ++t) {
            const auto phi = baseline_phases(ch, Method::Random, rng);
            CHECK(sinr_nonreciprocal(ch, phi, kBudget).min() <= joint.t_star * (1 + 1e-9));
        }
    }
}

TEST_CASE("feasibility test brackets the optimum") {
    const auto ch = draw(4, 3);
    const QuadraticFormPair f = build_quadratic_forms(ch, kBudget);
    const double t = sdp_maxmin_joint(f).t_star;
    CHECK(sdp_feasibility(f, 0.9 * t).feasible);
    CHECK_FALSE(sdp_feasibility(f, 1.1 * t).feasible);
}

TEST_CASE("gaussian randomization") {
    const auto ch = draw(8, 4);
    const QuadraticFormPair f = build_quadratic_forms(ch, kBudget);
    const SdpResult r = sdp_maxmin_joint(f);
    const RandomizationResult a = gaussian_randomization(r.A_star, f, 50, 99, 3);
    const RandomizationResult b = gaussian_randomization(r.A_star, f, 50, 99, 3);
    CHECK(a.phases == b.phases);
    CHECK(a.candidates == 50);
    CHECK(a.objective == doctest::Approx(sinr_nonreciprocal(ch, a.phases, kBudget).min()).epsilon(1e-10));
    CHECK(a.objective <= r.t_star * (1 + 1e-9));
    // more candidates never lose: the first 50 are a prefix of the 200
    CHECK(gaussian_randomization(r.A_star, f, 200, 99, 3).objective >= a.objective);
    CHECK_THROWS_AS(gaussian_randomization(r.A_star, f, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_randomization(SymmetricMatrix::identity(4), f, 5, 1, 1), DimensionMismatch);
}

TEST_CASE("greedy ascent is monotone and bounded by the relaxation") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        const auto ch = draw(8, seed);
        const MaxMinResult g = greedy_iterative(ch, kBudget);
        REQUIRE(g.sweep_objective.size() >= 2);
        for (std::size_t k = 1; k < g.sweep_objective.size(); ++k) {
            CHECK(g.sweep_objective[k] >= g.sweep_objective[k - 1]);
        }
        CHECK(g.achieved.min() == doctest::Approx(g.sweep_objective.back()));
        const double t = sdp_maxmin_joint(build_quadratic_forms(ch, kBudget)).t_star;
        CHECK(g.achieved.min() <= t * (1 + 1e-6));
        CHECK_FALSE(g.t_star.has_value());
    }
}

TEST_CASE("sdp_relax packages the pipeline") {
    const auto ch = draw(8, 5);
    const MaxMinResult r = sdp_relax(ch, kBudget, 100, 7, 0);
    REQUIRE(r.t_star.has_value());
    CHECK(r.achieved.min() <= *r.t_star * (1 + 1e-6));
    CHECK(r.feasibility_gap >= 0.0);
    CHECK(r.feasibility_gap <= 1e-6 * *r.t_star);
    CHECK(r.method == Method::SdpRelax);
}

TEST_CASE("u1 baseline maximizes user 1") {
    const auto ch = draw(8, 6);
    Rng rng(0, 0);
    const SinrPair u1 = sinr_nonreciprocal(ch, baseline_phases(ch, Method::U1Phase, rng), kBudget);
    const SinrPair g = greedy_iterative(ch, kBudget).achieved;
    const SinrPair s = sdp_relax(ch, kBudget, 100, 1, 0).achieved;
    CHECK(u1.gamma1 > g.gamma1);
    CHECK(u1.gamma1 > s.gamma1);
}

TEST_CASE("single element: bisection resolves the constant objective exactly") {
    const auto ch = draw(1, 3);
    const QuadraticFormPair f = build_quadratic_forms(ch, kBudget);
    const double v = sinr_nonreciprocal(ch, PhaseVector{1.1}, kBudget).min();
    CHECK(sdp_feasibility(f, v * (1 - 1e-9)).feasible);
    CHECK_FALSE(sdp_feasibility(f, v * (1 + 1e-9)).feasible);
    CHECK(sdp_maxmin(f).t_star == doctest::Approx(v).epsilon(1e-4));
}

TEST_CASE("joint solve certifies a tight gap across sizes") {
    for (int L : {2, 4, 16, 32}) {
        for (std::uint64_t seed = 0; seed < (L == 32 ? 10u : 40u); ++seed) {
            const auto ch = draw(L, 1000 + seed);
            const QuadraticFormPair f = build_quadratic_forms(ch, kBudget);
            SdpResult r;
            REQUIRE_NOTHROW(r = sdp_maxmin_joint(f));
            const double achieved = std::min(f.F1.dot(r.A_star), f.F2.dot(r.A_star));
            CHECK(r.t_star - achieved <= 1e-4 * r.t_star);
        }
    }
}
