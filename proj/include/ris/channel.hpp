#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ris/rng.hpp"

namespace ris {

using Complex = std::complex<double>;

enum class Scheme { One, Two };
enum class Reciprocity { Reciprocal, NonReciprocal };

struct PhaseErrorModel {
    enum class Kind { None, Uniform, VonMises };
    Kind kind = Kind::None;
    double delta = 0.0;  // Uniform(-delta, delta)
    double mu = 0.0;     // von Mises location
    double kappa = 0.0;  // von Mises concentration

    static PhaseErrorModel none() { return {}; }
    static PhaseErrorModel uniform(double delta) { return {Kind::Uniform, delta, 0.0, 0.0}; }
    static PhaseErrorModel von_mises(double mu, double kappa) { return {Kind::VonMises, 0.0, mu, kappa}; }
};

/// Powers and noise in linear milliwatts; gamma_th linear.
struct SystemConfig {
    int L = 1;
    double sigma2 = 1.0;
    double p1_mw = 1.0;
    double p2_mw = 1.0;
    double noise_mw = 1e-7;
    double omega = 1e-4;
    double nu = 0.0;
    Scheme scheme = Scheme::One;
    Reciprocity reciprocity = Reciprocity::Reciprocal;
    double gamma_th = 1.0;
    PhaseErrorModel phase_error;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// One fading draw.  Reciprocal links fill h and g; non-reciprocal links fill
/// the four directional vectors.  h[l] = alpha_l exp(-j phi_l) and so on.
struct ChannelRealization {
    Reciprocity reciprocity = Reciprocity::Reciprocal;
    std::vector<Complex> h;
    std::vector<Complex> g;
    std::vector<Complex> h_t;
    std::vector<Complex> h_r;
    std::vector<Complex> g_t;
    std::vector<Complex> g_r;

    std::size_t size() const noexcept {
        return reciprocity == Reciprocity::Reciprocal ? h.size() : h_t.size();
    }
};

struct SinrBudget {
    double rho1 = 0.0;
    double rho2 = 0.0;
};

struct SinrPair {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double min() const noexcept { return gamma1 < gamma2 ? gamma1 : gamma2; }
};

/// RIS phases in [0, 2pi).
using PhaseVector = std::vector<double>;

double wrap_phase(double phi);
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);
double db_to_linear(double db);

/// Scheme 1: rho_1 = P2 / (omega P1^nu + noise), rho_2 = P1 / (omega P2^nu + noise).
/// Scheme 2: rho_1 = P2 / noise, rho_2 = P1 / noise.
SinrBudget sinr_budget(const SystemConfig& cfg);

/// Every coefficient CN(0, sigma2).  Draw order: h, g (reciprocal) or
/// h_t, h_r, g_t, g_r, each element real part then imaginary part.
ChannelRealization sample_channels(const SystemConfig& cfg, Rng& rng);

/// Per-element products whose phased sum sets each user's SINR:
/// reciprocal h g for both users, otherwise h_r g_t (user 1) and g_r h_t (user 2).
std::vector<Complex> cascade_user1(const ChannelRealization& ch);
std::vector<Complex> cascade_user2(const ChannelRealization& ch);

SinrPair sinr_reciprocal(const ChannelRealization& ch, std::span<const double> phases, const SinrBudget& budget);
SinrPair sinr_nonreciprocal(const ChannelRealization& ch, std::span<const double> phases, const SinrBudget& budget);
/// Dispatches on ch.reciprocity.
SinrPair sinr(const ChannelRealization& ch, std::span<const double> phases, const SinrBudget& budget);

/// Reciprocal link with phases perturbed element-wise: phi_l + eps_l.
SinrPair sinr_with_phase_error(const ChannelRealization& ch, std::span<const double> phases,
                               const SinrBudget& budget, std::span<const double> errors);

/// L i.i.d. errors from the model; zeros for Kind::None (no draws consumed).
std::vector<double> draw_phase_errors(const PhaseErrorModel& model, int L, Rng& rng);

/// Best-Fisher rejection sampler, result in (-pi, pi].
double sample_von_mises(double mu, double kappa, Rng& rng);

}  // namespace ris
