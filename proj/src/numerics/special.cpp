#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ris/numerics.hpp"

namespace ris::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// K_0 and K_1 together.  For x <= 2 the ascending series; above, Steed's
// continued fraction (Temme's CF2 at order zero) which carries the e^{-x}
// factor explicitly and therefore underflows cleanly.
struct K01 {
    double k0;
    double k1;
};

K01 bessel_k01(double x) {
    if (x <= 2.0) {
        const double y = 0.25 * x * x;
        const double log_half = std::log(0.5 * x);

        // K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} H_k y^k / (k!)^2
        // K1 = 1/x + ln(x/2) I1 - (x/4) sum_{k>=0} (psi(k+1) + psi(k+2)) y^k / (k!(k+1)!)
        double term0 = 1.0;  // y^k / (k!)^2
        double term1 = 1.0;  // y^k / (k!(k+1)!)
        double i0 = 1.0;
        double i1_series = 1.0;
        double harmonic = 0.0;  // H_k
        double k0_tail = 0.0;
        double k1_tail = -2.0 * kEulerGamma + 1.0;  // psi(1) + psi(2) at k = 0
        for (int k = 1; k < 200; ++k) {
            term0 *= y / (static_cast<double>(k) * k);
            term1 *= y / (static_cast<double>(k) * (k + 1));
            harmonic += 1.0 / k;
            const double psi_sum = 2.0 * (harmonic - kEulerGamma) + 1.0 / (k + 1);
            i0 += term0;
            i1_series += term1;
            k0_tail += harmonic * term0;
            k1_tail += psi_sum * term1;
            if (term0 < kEps * 1e-3 * i0 && term1 < kEps * 1e-3 * i1_series) {
                break;
            }
        }
        const double i1 = 0.5 * x * i1_series;
        const double k0 = -(log_half + kEulerGamma) * i0 + k0_tail;
        const double k1 = 1.0 / x + log_half * i1 - 0.25 * x * k1_tail;
        return {k0, k1};
    }

    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            break;
        }
    }
    h = a1 * h;
    const double k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

}  // namespace

double bessel_k(int order, double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("bessel_k: argument must be positive, got " + std::to_string(x));
    }
    if (order < 0) {
        throw std::domain_error("bessel_k: order must be nonnegative");
    }
    const K01 base = bessel_k01(x);
    if (order == 0) {
        return base.k0;
    }
    double km = base.k0;
    double k = base.k1;
    for (int n = 1; n < order; ++n) {
        const double kp = km + (2.0 * n / x) * k;
        km = k;
        k = kp;
    }
    return k;
}

double scaled_bessel_k(int order, double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("scaled_bessel_k: argument must be positive");
    }
    if (order < 1) {
        throw std::domain_error("scaled_bessel_k: order must be >= 1");
    }
    // s_n = (x/2)^n K_n / (n-1)!  obeys  s_{n+1} = s_n + (x^2/4) s_{n-1} / (n (n-1)),
    // a recurrence with positive terms only.
    const K01 base = bessel_k01(x);
    const double half = 0.5 * x;
    double s_prev = half * base.k1;                          // s_1
    if (order == 1) {
        return s_prev;
    }
    double s = half * half * base.k0 + half * base.k1;       // s_2
    const double y = half * half;
    for (int n = 2; n < order; ++n) {
        const double next = s + y * s_prev / (static_cast<double>(n) * (n - 1));
        s_prev = s;
        s = next;
    }
    return s;
}

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) {
        throw std::domain_error("regularized_gamma_p: a must be positive");
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("regularized_gamma_p: x must be nonnegative");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x < a + 1.0) {
        double ap = a;
        double del = 1.0 / a;
        double sum = del;
        for (int n = 0; n < 100000; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * kEps) {
                break;
            }
        }
        const double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return std::min(p, 1.0);
    }
    return 1.0 - regularized_gamma_q(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0)) {
        throw std::domain_error("regularized_gamma_q: a must be positive");
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("regularized_gamma_q: x must be nonnegative");
    }
    if (x < a + 1.0) {
        return 1.0 - regularized_gamma_p(a, x);
    }
    // Modified Lentz evaluation of the continued fraction for Gamma(a, x).
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double digamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("digamma: x must be positive");
    }
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli tail B_{2n} / (2n x^{2n}), n = 1..7
    const double tail =
        inv2 * (1.0 / 12 -
                inv2 * (1.0 / 120 -
                        inv2 * (1.0 / 252 -
                                inv2 * (1.0 / 240 -
                                        inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12))))));
    return result + std::log(x) - 0.5 * inv - tail;
}

double erf(double x) { return std::erf(x); }

}  // namespace ris::numerics
