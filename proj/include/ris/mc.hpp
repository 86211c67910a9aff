#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ris/channel.hpp"

namespace ris::mc {

enum class Metric { Outage, SpectralEfficiency };

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Metric metric = Metric::Outage;
};

/// How each trial's RIS phases are chosen.  Optimal co-phases the reciprocal
/// link (or, in Scheme 2, each one-way slot separately); SdpRelax and Greedy
/// need a non-reciprocal channel.
enum class PhaseRule { Optimal, U1Phase, Random, SdpRelax, Greedy };

/// Which SINR the metric is taken over.
enum class User { One, Two, Min };

struct PhasePolicy {
    PhaseRule rule = PhaseRule::Optimal;
    User user = User::One;
    int randomization_candidates = 100;
    int greedy_grid = 360;
};

/// Per-trial SINR per unit rho: gamma_p = rho_p * g_p.  The phases are
/// designed with the budget of the reference config; for P1 = P2 sweeps the
/// budget ratio is constant, so one set of gains serves a whole power grid
/// with common random numbers.
struct TrialGains {
    std::vector<double> g1;
    std::vector<double> g2;
    std::uint64_t seed = 0;
    std::size_t size() const noexcept { return g1.size(); }
};

/// Trial i draws from Rng(seed, i): channel, then phase errors, then random
/// phases.  Bit-identical for any worker count.
TrialGains simulate_gains(const SystemConfig& cfg, const PhasePolicy& policy, std::uint64_t trials,
                          std::uint64_t seed, int workers);

McEstimate outage_from_gains(const TrialGains& gains, const SinrBudget& budget, double gamma_th, User user);
/// Mean log2(1 + gamma); halved for Scheme 2.
McEstimate se_from_gains(const TrialGains& gains, const SinrBudget& budget, User user, Scheme scheme);

McEstimate estimate_outage(const SystemConfig& cfg, const PhasePolicy& policy, std::uint64_t trials,
                           std::uint64_t seed, int workers);
McEstimate estimate_se(const SystemConfig& cfg, const PhasePolicy& policy, std::uint64_t trials, std::uint64_t seed,
                       int workers);

struct Crossover {
    double p_dbm = 0.0;
    /// Delta method: paired std error of SE1 - SE2 over its slope in dB.
    double std_error_db = 0.0;
};

/// Power (dBm, P1 = P2) where the Scheme 1 and Scheme 2 SE curves cross.
/// The grid locates a sign change of SE1 - SE2; bisection on P refines it
/// with the same trials.  Throws NoCrossover when the sign never changes.
Crossover find_crossover(const SystemConfig& cfg, const PhasePolicy& policy, std::span<const double> p_dbm_grid,
                      std::uint64_t trials, std::uint64_t seed, int workers);

/// Seed for Gaussian-randomization substreams, kept apart from the
/// per-trial channel streams Rng(seed, i).
std::uint64_t randomization_seed(std::uint64_t seed);

/// Config with P1 = P2 = dBm(p_dbm).
SystemConfig at_power(SystemConfig cfg, double p_dbm);

}  // namespace ris::mc
