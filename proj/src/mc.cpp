#include "ris/mc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ris/errors.hpp"
#include "ris/optim.hpp"
#include "ris/parallel.hpp"

namespace ris::mc {

namespace {

constexpr std::uint64_t kChunk = 1024;

double phased_gain(const std::vector<Complex>& v, const PhaseVector& phases, const std::vector<double>& eps) {
    Complex acc(0.0, 0.0);
    for (std::size_t l = 0; l < v.size(); ++l) {
        const double phi = phases[l] + eps[l];
        acc += v[l] * Complex(std::cos(phi), std::sin(phi));
    }
    return std::norm(acc);
}

PhaseVector co_phase(const std::vector<Complex>& v) {
    PhaseVector phi(v.size());
    for (std::size_t l = 0; l < v.size(); ++l) {
        phi[l] = wrap_phase(-std::arg(v[l]));
    }
    return phi;
}

double gamma_of(const TrialGains& gains, const SinrBudget& budget, User user, std::size_t i) {
    const double a = budget.rho1 * gains.g1[i];
    const double b = budget.rho2 * gains.g2[i];
    switch (user) {
    case User::One:
        return a;
    case User::Two:
        return b;
    case User::Min:
        return std::min(a, b);
    }
    return a;
}

}  // namespace

std::uint64_t randomization_seed(std::uint64_t seed) {
    std::uint64_t s = seed ^ 0x52414e444f4d495aULL;
    return splitmix64(s);
}

SystemConfig at_power(SystemConfig cfg, double p_dbm) {
    cfg.p1_mw = cfg.p2_mw = dbm_to_mw(p_dbm);
    return cfg;
}

TrialGains simulate_gains(const SystemConfig& cfg, const PhasePolicy& policy, std::uint64_t trials,
                          std::uint64_t seed, int workers) {
    cfg.validate();
    const bool reciprocal = cfg.reciprocity == Reciprocity::Reciprocal;
    const bool per_slot = cfg.scheme == Scheme::Two &&
                          (policy.rule == PhaseRule::Optimal || policy.rule == PhaseRule::SdpRelax ||
                           policy.rule == PhaseRule::Greedy);
    if (!per_slot && reciprocal && (policy.rule == PhaseRule::SdpRelax || policy.rule == PhaseRule::Greedy)) {
        throw std::invalid_argument("max-min phase design needs a non-reciprocal channel");
    }
    if (!per_slot && !reciprocal && policy.rule == PhaseRule::Optimal) {
        throw std::invalid_argument("co-phasing both users needs a reciprocal channel; use sdp, greedy, u1 or random");
    }

    SinrBudget design = sinr_budget(cfg);
    if (!(design.rho1 > 0.0) || !(design.rho2 > 0.0)) {
        design = {1.0, 1.0};
    }
    const std::uint64_t rseed = randomization_seed(seed);

    TrialGains out;
    out.seed = seed;
    out.g1.resize(trials);
    out.g2.resize(trials);
    const std::size_t chunks = static_cast<std::size_t>((trials + kChunk - 1) / kChunk);
    parallel_for(chunks, workers, [&](std::size_t c) {
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min<std::uint64_t>(trials, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
            Rng rng(seed, i);
            const ChannelRealization ch = sample_channels(cfg, rng);
            const std::vector<double> eps = draw_phase_errors(cfg.phase_error, cfg.L, rng);
            const std::vector<Complex> v1 = cascade_user1(ch);
            const std::vector<Complex> v2 = reciprocal ? v1 : cascade_user2(ch);
            if (per_slot) {
                out.g1[i] = phased_gain(v1, co_phase(v1), eps);
                out.g2[i] = phased_gain(v2, co_phase(v2), eps);
                continue;
            }
            PhaseVector phases;
            switch (policy.rule) {
            case PhaseRule::Optimal:
            case PhaseRule::U1Phase:
                phases = co_phase(v1);
                break;
            case PhaseRule::Random:
                phases = optim::baseline_phases(ch, optim::Method::Random, rng);
                break;
            case PhaseRule::SdpRelax:
                phases = optim::sdp_relax(ch, design, policy.randomization_candidates, rseed, i).phases;
                break;
            case PhaseRule::Greedy:
                phases = optim::greedy_iterative(ch, design, policy.greedy_grid).phases;
                break;
            }
            out.g1[i] = phased_gain(v1, phases, eps);
            out.g2[i] = reciprocal ? out.g1[i] : phased_gain(v2, phases, eps);
        }
    });
    return out;
}

McEstimate outage_from_gains(const TrialGains& gains, const SinrBudget& budget, double gamma_th, User user) {
    const std::size_t n = gains.size();
    if (n == 0) {
        throw std::invalid_argument("outage_from_gains: no trials");
    }
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (gamma_of(gains, budget, user, i) <= gamma_th) {
            ++hits;
        }
    }
    McEstimate e;
    e.metric = Metric::Outage;
    e.trials = n;
    e.seed = gains.seed;
    e.value = static_cast<double>(hits) / static_cast<double>(n);
    e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(n));
    return e;
}

McEstimate se_from_gains(const TrialGains& gains, const SinrBudget& budget, User user, Scheme scheme) {
    const std::size_t n = gains.size();
    if (n == 0) {
        throw std::invalid_argument("se_from_gains: no trials");
    }
    // Welford in trial order: the same sum for any worker count.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log1p(gamma_of(gains, budget, user, i)) / std::log(2.0);
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double factor = scheme == Scheme::Two ? 0.5 : 1.0;
    McEstimate e;
    e.metric = Metric::SpectralEfficiency;
    e.trials = n;
    e.seed = gains.seed;
    e.value = factor * mean;
    e.std_error = n > 1 ? factor * std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
    return e;
}

McEstimate estimate_outage(const SystemConfig& cfg, const PhasePolicy& policy, std::uint64_t trials,
                           std::uint64_t seed, int workers) {
    const TrialGains g = simulate_gains(cfg, policy, trials, seed, workers);
    return outage_from_gains(g, sinr_budget(cfg), cfg.gamma_th, policy.user);
}

McEstimate estimate_se(const SystemConfig& cfg, const PhasePolicy& policy, std::uint64_t trials, std::uint64_t seed,
                       int workers) {
    const TrialGains g = simulate_gains(cfg, policy, trials, seed, workers);
    return se_from_gains(g, sinr_budget(cfg), policy.user, cfg.scheme);
}

Crossover find_crossover(const SystemConfig& cfg, const PhasePolicy& policy, std::span<const double> p_dbm_grid,
                      std::uint64_t trials, std::uint64_t seed, int workers) {
    if (p_dbm_grid.size() < 2) {
        throw std::invalid_argument("find_crossover: grid needs at least two powers");
    }
    SystemConfig one = cfg;
    one.scheme = Scheme::One;
    SystemConfig two = cfg;
    two.scheme = Scheme::Two;
    const TrialGains g1 = simulate_gains(one, policy, trials, seed, workers);
    const TrialGains g2 = simulate_gains(two, policy, trials, seed, workers);
    auto diff = [&](double p_dbm) {
        return se_from_gains(g1, sinr_budget(at_power(one, p_dbm)), policy.user, Scheme::One).value -
               se_from_gains(g2, sinr_budget(at_power(two, p_dbm)), policy.user, Scheme::Two).value;
    };

    auto finish = [&](double p_dbm) {
        const SinrBudget b1 = sinr_budget(at_power(one, p_dbm));
        const SinrBudget b2 = sinr_budget(at_power(two, p_dbm));
        double mean = 0.0;
        double m2 = 0.0;
        for (std::size_t i = 0; i < g1.size(); ++i) {
            const double x = (std::log1p(gamma_of(g1, b1, policy.user, i)) -
                              0.5 * std::log1p(gamma_of(g2, b2, policy.user, i))) /
                             std::log(2.0);
            const double delta = x - mean;
            mean += delta / static_cast<double>(i + 1);
            m2 += delta * (x - mean);
        }
        const double n = static_cast<double>(g1.size());
        const double se = n > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
        const double h = 0.05;
        const double slope = (diff(p_dbm + h) - diff(p_dbm - h)) / (2.0 * h);
        Crossover c;
        c.p_dbm = p_dbm;
        c.std_error_db = slope != 0.0 ? se / std::abs(slope) : std::numeric_limits<double>::infinity();
        return c;
    };

    double lo = p_dbm_grid[0];
    double d_lo = diff(lo);
    for (std::size_t k = 1; k < p_dbm_grid.size(); ++k) {
        const double hi = p_dbm_grid[k];
        const double d_hi = diff(hi);
        if (d_lo == 0.0) {
            return finish(lo);
        }
        if ((d_lo < 0.0) != (d_hi < 0.0) || d_hi == 0.0) {
            double a = lo;
            double b = hi;
            double fa = d_lo;
            for (int it = 0; it < 100 && b - a > 1e-6; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = diff(mid);
                if ((fm < 0.0) == (fa < 0.0) && fm != 0.0) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return finish(0.5 * (a + b));
        }
        lo = hi;
        d_lo = d_hi;
    }
    throw NoCrossover("find_crossover: Scheme 1 - Scheme 2 keeps one sign over the power grid");
}

}  // namespace ris::mc
