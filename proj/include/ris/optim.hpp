#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ris/channel.hpp"
#include "ris/numerics.hpp"
#include "ris/rng.hpp"

namespace ris::optim {

using numerics::SymmetricMatrix;

/// F_p = c_p c_p^T + d_p d_p^T over the stacked vector
/// alpha = (cos phi_1, sin phi_1, ..., cos phi_L, sin phi_L), so that
/// alpha^T F_p alpha is user p's SINR.
struct QuadraticFormPair {
    SymmetricMatrix F1;
    SymmetricMatrix F2;
};

enum class Method { SdpRelax, GreedyIterative, U1Phase, Random };

const char* method_name(Method m);

struct MaxMinResult {
    /// Relaxation optimum; only the SDP path produces one.
    std::optional<double> t_star;
    SymmetricMatrix A_star;
    PhaseVector phases;
    SinrPair achieved;
    Method method = Method::SdpRelax;
    int iterations = 0;
    /// Certified duality gap of the relaxation (SDP only).
    double feasibility_gap = 0.0;
    /// Greedy: min-SINR after each full sweep, starting with the initial point.
    std::vector<double> sweep_objective;
};

/// phi_l = -arg(h_l g_l) mod 2pi: co-phases every cascade term.
PhaseVector optimal_phase_reciprocal(const ChannelRealization& ch);

QuadraticFormPair build_quadratic_forms(const ChannelRealization& ch, const SinrBudget& budget);

/// (cos phi_1, sin phi_1, ...).
std::vector<double> phases_to_vector(const PhaseVector& phases);

struct SdpOptions {
    /// Bisection stops once (t_U - t_L) <= tolerance * t_L.
    double tolerance = 1e-4;
    /// Joint solve stops once the certified gap is below gap_tolerance * t.
    double gap_tolerance = 1e-7;
    /// Accepted instead when the iterate hits its rounding floor first.
    double floor_gap_tolerance = 1e-4;
    double newton_tolerance = 1e-9;
    double barrier_growth = 10.0;
    int max_newton_steps = 500;
};

struct SdpResult {
    double t_star = 0.0;
    /// Certified upper bound on the relaxation optimum.
    double upper_bound = 0.0;
    SymmetricMatrix A_star;
    int iterations = 0;
};

/// Relaxation max_A min_p F_p . A  s.t.  I_l . A = 1, A PSD, solved directly
/// by a primal log-barrier method.  t_star is the certified dual bound;
/// min_p F_p . A_star is within gap_tolerance of it.
SdpResult sdp_maxmin_joint(const QuadraticFormPair& forms, const SdpOptions& opts = {});

/// Same relaxation through the bracket-and-bisect search over t with a
/// feasibility test at each trial t.
SdpResult sdp_maxmin(const QuadraticFormPair& forms, const SdpOptions& opts = {});

struct FeasibilityResult {
    bool feasible = false;
    /// Best certified bound on the slack s* = max_A min_p F_p . A - t:
    /// a lower bound when feasible, an upper bound otherwise.
    double slack = 0.0;
    SymmetricMatrix A;
    int iterations = 0;
};

/// Is there an A with F_p . A >= t for both users?  Terminates as soon as
/// either a primal point or a dual certificate decides the question.
FeasibilityResult sdp_feasibility(const QuadraticFormPair& forms, double t, const SdpOptions& opts = {});

struct RandomizationResult {
    PhaseVector phases;
    /// min_p xi^T F_p xi of the winning candidate.
    double objective = 0.0;
    int candidates = 0;
};

/// K candidates xi ~ N(0, A_star), each coordinate pair normalized to the
/// unit circle, scored by the smaller quadratic form.  Candidate k draws from
/// Rng(seed, stream, k).
RandomizationResult gaussian_randomization(const SymmetricMatrix& A_star, const QuadraticFormPair& forms, int K,
                                           std::uint64_t seed, std::uint64_t stream);

/// Coordinate ascent over the grid 2 pi k / K on min(gamma_1, gamma_2).
/// Stops when a full sweep gains less than improvement_threshold times the
/// current objective.
MaxMinResult greedy_iterative(const ChannelRealization& ch, const SinrBudget& budget, int K = 360,
                              double improvement_threshold = 1e-6);

/// U1Phase co-phases user 1's link; Random draws i.i.d. uniform phases.
PhaseVector baseline_phases(const ChannelRealization& ch, Method kind, Rng& rng);

/// SDP relaxation (joint path) followed by Gaussian randomization.
MaxMinResult sdp_relax(const ChannelRealization& ch, const SinrBudget& budget, int K, std::uint64_t seed,
                       std::uint64_t stream, const SdpOptions& opts = {});

}  // namespace ris::optim
