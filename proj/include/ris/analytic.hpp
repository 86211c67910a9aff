#pragma once

#include <functional>

#include "ris/channel.hpp"
#include "ris/numerics.hpp"

namespace ris::analytic {

/// Gamma fit of one cascade amplitude alpha*beta: shape k, scale theta.
struct GammaApproxParams {
    double k = 0.0;
    double theta = 0.0;
};

/// Gaussian fit of the L-element cascade sum.
struct CltParams {
    double mu = 0.0;
    double eta = 0.0;
};

GammaApproxParams gamma_approx_params(double sigma2);
CltParams clt_params(int L, double sigma2);

/// All outage functions return P[rho Z^2 <= gamma_th] where Z is the
/// co-phased cascade sum, clamped to [0, 1].
double outage_exact_L1(double gamma_th, double rho, double sigma2);
double outage_gamma(int L, double gamma_th, double rho, const GammaApproxParams& params);
double outage_clt(double gamma_th, double rho, const CltParams& params);
/// Uniform(-pi, pi) phase errors: the phased sum behaves like one cascade of order L.
double outage_phase_error_uniform_pi(int L, double gamma_th, double rho, double sigma2);

/// Exact CDF of the sum of L i.i.d. double-Rayleigh amplitudes at z >= 0,
/// by fixed-Talbot inversion of M(s)^L / s.  Relative accuracy ~1e-12
/// from the bulk down to the deep lower tail.
double cascade_sum_cdf(int L, double z, double sigma2);
/// Exact outage for any L: L = 1 via the Bessel closed form, otherwise Talbot.
double outage_exact(int L, double gamma_th, double rho, double sigma2);

using Cdf = std::function<double(double)>;

/// (1/ln 2) int_0^inf (1 - F(x)) / (1 + x) dx, bits/s/Hz.
double spectral_efficiency(const Cdf& cdf, const numerics::QuadratureSpec& spec = {});

/// Convenience wrappers around spectral_efficiency for the reciprocal link.
/// L = 1 uses the exact law, L >= 2 the gamma fit.
double se_reciprocal(int L, double rho, double sigma2, const numerics::QuadratureSpec& spec = {});
double se_phase_error_uniform_pi(int L, double rho, double sigma2, const numerics::QuadratureSpec& spec = {});

/// High-power outage, P1 = P2 = P.  nu = 0: decay law (log P / P)^L with the
/// approximate array gain; nu = 1: floor at rho = 1/omega.  Other nu throw
/// std::domain_error.
double asymptotic_outage(int L, double gamma_th, double p_mw, double omega, double nu, double noise_mw,
                         double sigma2);

/// High-power spectral efficiency.  Scheme 1 follows the same nu split as the
/// outage; Scheme 2 is the interference-free half-rate asymptote.
double asymptotic_se(int L, double p_mw, double omega, double nu, double noise_mw, double sigma2, Scheme scheme);

/// SE gain from L1 to L2 elements, bits/s/Hz.
double delta_r(int L1, int L2, double k);
/// Power saving from L1 to L2 elements at fixed SE, dB.
double delta_p(int L1, int L2, double k);

struct CrossoverBoundary {
    double p_mw = 0.0;
    /// nu = 0: Scheme 1 wins above p_mw; nu = 1: Scheme 1 wins below.
    bool scheme1_above = true;
};

/// Power boundary between Scheme 1 and Scheme 2 from the high-power SE
/// asymptotes.  nu must be 0 or 1.
CrossoverBoundary scheme_crossover_power(int L, double omega, double nu, double noise_mw, double sigma2);

/// KL divergence of the gamma fit from the exact cascade-amplitude density.
double kl_divergence_gamma_fit(double sigma2);

}  // namespace ris::analytic
