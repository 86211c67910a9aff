#include "ris/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ris::analytic {

using numerics::kEulerGamma;
using numerics::kPi;

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// 1 - 2 (z/2)^n K_n(z) / Gamma(n).  The ascending series avoids the
// cancellation of the direct form when z is small and the result is tiny.
double one_minus_two_scaled_k(int n, double z) {
    if (z >= 1.0) {
        return 1.0 - 2.0 * numerics::scaled_bessel_k(n, z);
    }
    const double y = 0.25 * z * z;
    const double lz = std::log(0.5 * z);

    // (1/2) sum_{k=1}^{n-1} (n-k-1)! / ((n-1)! k!) (-y)^k
    double finite = 0.0;
    if (n >= 2) {
        double t = y / (n - 1);
        double sign = -1.0;
        for (int k = 1; k <= n - 1; ++k) {
            finite += sign * t;
            if (k < n - 1) {
                t *= y / (static_cast<double>(n - k - 1) * (k + 1));
            }
            sign = -sign;
        }
        finite *= 0.5;
    }

    // y^n / ((n-1)! n!) times sums over u_k = n! y^k / (k! (n+k)!)
    const double base = std::exp(n * std::log(y) - std::lgamma(n) - std::lgamma(n + 1.0));
    double u = 1.0;
    double h_k = 0.0;  // H_k
    double h_nk = 0.0;  // H_{n+k}
    for (int j = 1; j <= n; ++j) {
        h_nk += 1.0 / j;
    }
    double sum_u = 0.0;
    double sum_psi = 0.0;
    for (int k = 0; k < 200; ++k) {
        sum_u += u;
        sum_psi += (h_k + h_nk - 2.0 * kEulerGamma) * u;
        u *= y / ((k + 1.0) * (n + k + 1.0));
        h_k += 1.0 / (k + 1);
        h_nk += 1.0 / (n + k + 1);
        if (u < 1e-18 * sum_u) {
            break;
        }
    }
    const double odd = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n+1}
    const double b = odd * lz * base * sum_u;
    const double c = -odd * 0.5 * base * sum_psi;
    return -2.0 * (finite + b + c);
}

// Laplace transform of the double-Rayleigh amplitude density
// 4 t K0(a t) / sigma^4 with a = 2 / sigma^2, written in w = s / a.
// With w = cosh u it reads (u coth u - 1) / sinh^2 u, even in u, so the
// branch of arccosh does not matter.
std::complex<double> cascade_mgf(std::complex<double> w) {
    using C = std::complex<double>;
    const C root = std::sqrt(w - 1.0) * std::sqrt(w + 1.0);
    const C u = std::log(w + root);
    if (std::abs(u) < 0.1) {
        const C u2 = u * u;
        // u coth u - 1 = u^2/3 - u^4/45 + 2u^6/945 - u^8/4725 + 2u^10/93555
        const C num = u2 * (1.0 / 3 + u2 * (-1.0 / 45 + u2 * (2.0 / 945 + u2 * (-1.0 / 4725 + u2 * (2.0 / 93555)))));
        const C sh = std::sinh(u);
        return num / (sh * sh);
    }
    return (w * u / root - 1.0) / (w * w - 1.0);
}

}  // namespace

GammaApproxParams gamma_approx_params(double sigma2) {
    if (!(sigma2 > 0.0)) {
        throw std::domain_error("gamma_approx_params: sigma2 must be positive");
    }
    const double pi2 = kPi * kPi;
    return {pi2 / (16.0 - pi2), (16.0 - pi2) * sigma2 / (4.0 * kPi)};
}

CltParams clt_params(int L, double sigma2) {
    const double pi2 = kPi * kPi;
    return {L * kPi * sigma2 / 4.0, L * (16.0 - pi2) * sigma2 * sigma2 / 16.0};
}

double outage_exact_L1(double gamma_th, double rho, double sigma2) {
    if (gamma_th <= 0.0) {
        return 0.0;
    }
    if (rho <= 0.0) {
        return 1.0;
    }
    const double z = (2.0 / sigma2) * std::sqrt(gamma_th / rho);
    return clamp01(one_minus_two_scaled_k(1, z));
}

double outage_gamma(int L, double gamma_th, double rho, const GammaApproxParams& params) {
    if (gamma_th <= 0.0) {
        return 0.0;
    }
    if (rho <= 0.0) {
        return 1.0;
    }
    return clamp01(numerics::regularized_gamma_p(L * params.k, std::sqrt(gamma_th / rho) / params.theta));
}

double outage_clt(double gamma_th, double rho, const CltParams& params) {
    if (gamma_th <= 0.0) {
        return 0.0;
    }
    if (rho <= 0.0) {
        return 1.0;
    }
    const double x = std::sqrt(gamma_th / rho);
    const double s = std::sqrt(2.0 * params.eta);
    return clamp01(0.5 * (numerics::erf((x - params.mu) / s) + numerics::erf((x + params.mu) / s)));
}

double outage_phase_error_uniform_pi(int L, double gamma_th, double rho, double sigma2) {
    if (L < 1) {
        throw std::domain_error("outage_phase_error_uniform_pi: L must be >= 1");
    }
    if (gamma_th <= 0.0) {
        return 0.0;
    }
    if (rho <= 0.0) {
        return 1.0;
    }
    const double z = (2.0 / sigma2) * std::sqrt(gamma_th / rho);
    return clamp01(one_minus_two_scaled_k(L, z));
}

double cascade_sum_cdf(int L, double z, double sigma2) {
    if (L < 1) {
        throw std::domain_error("cascade_sum_cdf: L must be >= 1");
    }
    if (z <= 0.0) {
        return 0.0;
    }
    const double a = 2.0 / sigma2;
    if (L == 1) {
        return clamp01(one_minus_two_scaled_k(1, a * z));
    }
    // Fixed Talbot contour s(theta) = r theta (cot theta + i).
    using C = std::complex<double>;
    constexpr int M = 22;
    const double r = 2.0 * M / (5.0 * z);
    auto log_transform = [&](C s) { return static_cast<double>(L) * std::log(cascade_mgf(s / a)) - std::log(s); };
    double sum = 0.5 * std::exp(std::real(log_transform(C(r, 0.0))) + r * z);
    for (int k = 1; k < M; ++k) {
        const double theta = k * kPi / M;
        const double cot = 1.0 / std::tan(theta);
        const C s(r * theta * cot, r * theta);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        sum += std::real(std::exp(z * s + log_transform(s)) * C(1.0, sigma));
    }
    return clamp01(r / M * sum);
}

double outage_exact(int L, double gamma_th, double rho, double sigma2) {
    if (gamma_th <= 0.0) {
        return 0.0;
    }
    if (rho <= 0.0) {
        return 1.0;
    }
    if (L == 1) {
        return outage_exact_L1(gamma_th, rho, sigma2);
    }
    return cascade_sum_cdf(L, std::sqrt(gamma_th / rho), sigma2);
}

double spectral_efficiency(const Cdf& cdf, const numerics::QuadratureSpec& spec) {
    const auto r = numerics::integrate_semi_infinite(
        [&cdf](double x) { return (1.0 - cdf(x)) / (1.0 + x); }, spec);
    return r.value / kLn2;
}

namespace {

double se_from_ccdf(const numerics::Integrand& ccdf, const numerics::QuadratureSpec& spec) {
    const auto r = numerics::integrate_semi_infinite([&ccdf](double x) { return ccdf(x) / (1.0 + x); }, spec);
    return r.value / kLn2;
}

}  // namespace

double se_reciprocal(int L, double rho, double sigma2, const numerics::QuadratureSpec& spec) {
    if (rho <= 0.0) {
        return 0.0;
    }
    if (L == 1) {
        // 1 - F = z K1(z)
        return se_from_ccdf(
            [=](double x) {
                const double z = (2.0 / sigma2) * std::sqrt(x / rho);
                return z > 0.0 ? 2.0 * numerics::scaled_bessel_k(1, z) : 1.0;
            },
            spec);
    }
    const GammaApproxParams p = gamma_approx_params(sigma2);
    return se_from_ccdf(
        [=](double x) { return numerics::regularized_gamma_q(L * p.k, std::sqrt(x / rho) / p.theta); }, spec);
}

double se_phase_error_uniform_pi(int L, double rho, double sigma2, const numerics::QuadratureSpec& spec) {
    if (rho <= 0.0) {
        return 0.0;
    }
    return se_from_ccdf(
        [=](double x) {
            const double z = (2.0 / sigma2) * std::sqrt(x / rho);
            return z > 0.0 ? 2.0 * numerics::scaled_bessel_k(L, z) : 1.0;
        },
        spec);
}

namespace {

void require_nu_endpoint(double nu, const char* where) {
    if (nu != 0.0 && nu != 1.0) {
        throw std::domain_error(std::string(where) + ": only nu = 0 or nu = 1 has a closed asymptote");
    }
}

}  // namespace

double asymptotic_outage(int L, double gamma_th, double p_mw, double omega, double nu, double noise_mw,
                         double sigma2) {
    require_nu_endpoint(nu, "asymptotic_outage");
    const GammaApproxParams p = gamma_approx_params(sigma2);
    if (nu == 1.0) {
        return L == 1 ? outage_exact_L1(gamma_th, 1.0 / omega, sigma2) : outage_gamma(L, gamma_th, 1.0 / omega, p);
    }
    const double rate = std::log(p_mw) / p_mw;
    if (L == 1) {
        return gamma_th * (omega + noise_mw) / (sigma2 * sigma2) * rate;
    }
    const double kl = p.k * L;
    const double log_gain =
        0.5 * kl * std::log(gamma_th * (noise_mw + omega)) - std::log(kl) - kl * std::log(p.theta) - std::lgamma(kl);
    return std::exp(log_gain + L * std::log(rate));
}

double asymptotic_se(int L, double p_mw, double omega, double nu, double noise_mw, double sigma2, Scheme scheme) {
    const GammaApproxParams p = gamma_approx_params(sigma2);
    const double lp = std::log(p_mw);
    if (scheme == Scheme::Two) {
        if (L == 1) {
            return (lp - std::log(noise_mw / (sigma2 * sigma2)) - 2.0 * kEulerGamma) / (2.0 * kLn2);
        }
        return (lp + 2.0 * numerics::digamma(L * p.k) - std::log(noise_mw / (p.theta * p.theta))) / (2.0 * kLn2);
    }
    require_nu_endpoint(nu, "asymptotic_se");
    if (nu == 1.0) {
        return se_reciprocal(L, 1.0 / omega, sigma2);
    }
    if (L == 1) {
        return (lp - std::log((omega + noise_mw) / (sigma2 * sigma2)) - 2.0 * kEulerGamma) / kLn2;
    }
    return (lp + 2.0 * numerics::digamma(L * p.k) - std::log((noise_mw + omega) / (p.theta * p.theta))) / kLn2;
}

double delta_r(int L1, int L2, double k) {
    return 2.0 * (numerics::digamma(L2 * k) - numerics::digamma(L1 * k)) / kLn2;
}

double delta_p(int L1, int L2, double k) {
    return 20.0 * std::log10(std::exp(1.0)) * (numerics::digamma(L2 * k) - numerics::digamma(L1 * k));
}

CrossoverBoundary scheme_crossover_power(int L, double omega, double nu, double noise_mw, double sigma2) {
    require_nu_endpoint(nu, "scheme_crossover_power");
    const GammaApproxParams p = gamma_approx_params(sigma2);
    const double sw = std::sqrt(noise_mw);
    if (nu == 0.0) {
        if (L == 1) {
            const double base = (omega + noise_mw) / (sw * sigma2);
            return {base * base * std::exp(2.0 * kEulerGamma), true};
        }
        const double base = (omega + noise_mw) / (sw * p.theta);
        return {base * base * std::exp(-2.0 * numerics::digamma(L * p.k)), true};
    }
    const double floor_se = se_reciprocal(L, 1.0 / omega, sigma2);
    if (L == 1) {
        return {std::exp(2.0 * kLn2 * floor_se + std::log(noise_mw / (sigma2 * sigma2)) + 2.0 * kEulerGamma), false};
    }
    return {std::exp(2.0 * kLn2 * floor_se + std::log(noise_mw / (p.theta * p.theta)) -
                     2.0 * numerics::digamma(L * p.k)),
            false};
}

double kl_divergence_gamma_fit(double sigma2) {
    const GammaApproxParams p = gamma_approx_params(sigma2);
    // E[ln K0(2t/sigma^2)] under the exact density; with u = 2t/sigma^2 the
    // weight becomes u K0(u) du and sigma drops out.
    const auto expectation = numerics::integrate_semi_infinite([](double u) {
        const double k0 = numerics::bessel_k(0, u);
        return k0 > 0.0 ? u * k0 * std::log(k0) : 0.0;
    });
    return kPi * sigma2 / (4.0 * p.theta) + p.k * std::log(p.theta / sigma2) + kEulerGamma * (p.k - 2.0) +
           std::log(4.0 * std::tgamma(p.k)) + expectation.value;
}

}  // namespace ris::analytic
