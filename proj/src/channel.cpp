#include "ris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ris/errors.hpp"
#include "ris/numerics.hpp"

namespace ris {

using numerics::kPi;

namespace {

constexpr double kTwoPi = 2.0 * kPi;

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(std::string("SystemConfig: ") + what);
    }
}

void check_length(std::size_t n, std::size_t phases, const char* where) {
    if (n != phases) {
        throw DimensionMismatch(std::string(where) + ": channel has " + std::to_string(n) + " elements, phase vector " +
                                std::to_string(phases));
    }
}

std::vector<Complex> draw_vector(int L, double scale, Rng& rng) {
    std::vector<Complex> v(static_cast<std::size_t>(L));
    for (auto& c : v) {
        const double re = rng.normal();
        const double im = rng.normal();
        c = Complex(scale * re, scale * im);
    }
    return v;
}

// |sum_l v_l exp(j(phi_l + eps_l))|^2
double phased_power(std::span<const Complex> v, std::span<const double> phases, std::span<const double> errors = {}) {
    Complex acc(0.0, 0.0);
    for (std::size_t l = 0; l < v.size(); ++l) {
        const double phi = errors.empty() ? phases[l] : phases[l] + errors[l];
        acc += v[l] * Complex(std::cos(phi), std::sin(phi));
    }
    return std::norm(acc);
}

}  // namespace

void SystemConfig::validate() const {
    require(L >= 1, "L must be >= 1");
    require(sigma2 > 0.0, "sigma2 must be positive");
    require(p1_mw >= 0.0 && p2_mw >= 0.0, "powers must be nonnegative");
    require(noise_mw >= 0.0, "noise_mw must be nonnegative");
    require(omega >= 0.0, "omega must be nonnegative");
    require(nu >= 0.0 && nu <= 1.0, "nu must lie in [0, 1]");
    require(gamma_th >= 0.0, "gamma_th must be nonnegative");
    switch (phase_error.kind) {
    case PhaseErrorModel::Kind::None:
        break;
    case PhaseErrorModel::Kind::Uniform:
        require(phase_error.delta > 0.0 && phase_error.delta <= kPi, "phase error delta must lie in (0, pi]");
        break;
    case PhaseErrorModel::Kind::VonMises:
        require(phase_error.kappa > 0.0, "von Mises kappa must be positive");
        break;
    }
}

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2pi
    return w >= kTwoPi ? 0.0 : w;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

SinrBudget sinr_budget(const SystemConfig& cfg) {
    if (cfg.scheme == Scheme::Two) {
        if (cfg.noise_mw <= 0.0) {
            throw std::invalid_argument("sinr_budget: Scheme 2 needs positive noise power");
        }
        return {cfg.p2_mw / cfg.noise_mw, cfg.p1_mw / cfg.noise_mw};
    }
    const double d1 = cfg.omega * std::pow(cfg.p1_mw, cfg.nu) + cfg.noise_mw;
    const double d2 = cfg.omega * std::pow(cfg.p2_mw, cfg.nu) + cfg.noise_mw;
    if (d1 <= 0.0 || d2 <= 0.0) {
        throw std::invalid_argument("sinr_budget: interference plus noise must be positive");
    }
    return {cfg.p2_mw / d1, cfg.p1_mw / d2};
}

ChannelRealization sample_channels(const SystemConfig& cfg, Rng& rng) {
    const double scale = std::sqrt(0.5 * cfg.sigma2);
    ChannelRealization ch;
    ch.reciprocity = cfg.reciprocity;
    if (cfg.reciprocity == Reciprocity::Reciprocal) {
        ch.h = draw_vector(cfg.L, scale, rng);
        ch.g = draw_vector(cfg.L, scale, rng);
    } else {
        ch.h_t = draw_vector(cfg.L, scale, rng);
        ch.h_r = draw_vector(cfg.L, scale, rng);
        ch.g_t = draw_vector(cfg.L, scale, rng);
        ch.g_r = draw_vector(cfg.L, scale, rng);
    }
    return ch;
}

std::vector<Complex> cascade_user1(const ChannelRealization& ch) {
    const std::size_t n = ch.size();
    std::vector<Complex> v(n);
    for (std::size_t l = 0; l < n; ++l) {
        v[l] = ch.reciprocity == Reciprocity::Reciprocal ? ch.h[l] * ch.g[l] : ch.h_r[l] * ch.g_t[l];
    }
    return v;
}

std::vector<Complex> cascade_user2(const ChannelRealization& ch) {
    const std::size_t n = ch.size();
    std::vector<Complex> v(n);
    for (std::size_t l = 0; l < n; ++l) {
        v[l] = ch.reciprocity == Reciprocity::Reciprocal ? ch.h[l] * ch.g[l] : ch.g_r[l] * ch.h_t[l];
    }
    return v;
}

SinrPair sinr_reciprocal(const ChannelRealization& ch, std::span<const double> phases, const SinrBudget& budget) {
    if (ch.reciprocity != Reciprocity::Reciprocal) {
        throw std::invalid_argument("sinr_reciprocal: non-reciprocal realization");
    }
    check_length(ch.size(), phases.size(), "sinr_reciprocal");
    const double gain = phased_power(cascade_user1(ch), phases);
    return {budget.rho1 * gain, budget.rho2 * gain};
}

SinrPair sinr_nonreciprocal(const ChannelRealization& ch, std::span<const double> phases, const SinrBudget& budget) {
    if (ch.reciprocity != Reciprocity::NonReciprocal) {
        throw std::invalid_argument("sinr_nonreciprocal: reciprocal realization");
    }
    check_length(ch.size(), phases.size(), "sinr_nonreciprocal");
    return {budget.rho1 * phased_power(cascade_user1(ch), phases),
            budget.rho2 * phased_power(cascade_user2(ch), phases)};
}

SinrPair sinr(const ChannelRealization& ch, std::span<const double> phases, const SinrBudget& budget) {
    return ch.reciprocity == Reciprocity::Reciprocal ? sinr_reciprocal(ch, phases, budget)
                                                     : sinr_nonreciprocal(ch, phases, budget);
}

SinrPair sinr_with_phase_error(const ChannelRealization& ch, std::span<const double> phases,
                               const SinrBudget& budget, std::span<const double> errors) {
    if (ch.reciprocity != Reciprocity::Reciprocal) {
        throw std::invalid_argument("sinr_with_phase_error: non-reciprocal realization");
    }
    check_length(ch.size(), phases.size(), "sinr_with_phase_error");
    check_length(ch.size(), errors.size(), "sinr_with_phase_error");
    const double gain = phased_power(cascade_user1(ch), phases, errors);
    return {budget.rho1 * gain, budget.rho2 * gain};
}

std::vector<double> draw_phase_errors(const PhaseErrorModel& model, int L, Rng& rng) {
    std::vector<double> eps(static_cast<std::size_t>(L), 0.0);
    switch (model.kind) {
    case PhaseErrorModel::Kind::None:
        break;
    case PhaseErrorModel::Kind::Uniform:
        for (auto& e : eps) {
            e = model.delta * (2.0 * rng.uniform() - 1.0);
        }
        break;
    case PhaseErrorModel::Kind::VonMises:
        for (auto& e : eps) {
            e = sample_von_mises(model.mu, model.kappa, rng);
        }
        break;
    }
    return eps;
}

double sample_von_mises(double mu, double kappa, Rng& rng) {
    if (!(kappa > 0.0)) {
        throw std::domain_error("sample_von_mises: kappa must be positive");
    }
    double theta;
    if (kappa < 1e-8) {
        theta = kTwoPi * rng.uniform() - kPi;
    } else {
        const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
        const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
        const double r = (1.0 + rho * rho) / (2.0 * rho);
        double f;
        for (;;) {
            const double u1 = rng.uniform();
            const double u2 = rng.uniform();
            const double z = std::cos(kPi * u1);
            f = (1.0 + r * z) / (r + z);
            const double c = kappa * (r - f);
            if (c * (2.0 - c) - u2 > 0.0) {
                break;
            }
            if (u2 > 0.0 && std::log(c / u2) + 1.0 - c >= 0.0) {
                break;
            }
        }
        const double u3 = rng.uniform();
        theta = (u3 < 0.5 ? -1.0 : 1.0) * std::acos(std::clamp(f, -1.0, 1.0));
    }
    theta += mu;
    // back into (-pi, pi]
    theta = std::remainder(theta, kTwoPi);
    return theta <= -kPi ? theta + kTwoPi : theta;
}

}  // namespace ris
