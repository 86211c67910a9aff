#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ris/rng.hpp"

namespace ris::numerics {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

/// Modified Bessel function of the second kind K_n(x) for integer n >= 0.
/// Series below x = 2, Steed's continued fraction above, upward recurrence
/// in the order.  Throws std::domain_error for x <= 0 or n < 0.
double bessel_k(int order, double x);

/// (x/2)^n K_n(x) / Gamma(n): tends to 1/2 as x -> 0 and stays finite where
/// K_n alone would overflow.
double scaled_bessel_k(int order, double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed directly.
double regularized_gamma_q(double a, double x);

/// psi(x) = d/dx log Gamma(x), x > 0.
double digamma(double x);

/// Gauss error function.
double erf(double x);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadratureSpec {
    double relative_tolerance = 1e-9;
    double absolute_tolerance = 1e-12;
    int max_subdivisions = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Integral of f over (0, inf).  The half-line is mapped to (0, 1) with
/// x = t / (1 - t); the upper half of that interval is parametrized by
/// r = 1 - t so the tail near t = 1 keeps full precision.  Adaptive
/// Gauss-Kronrod 7/15 bisection, largest error first.
/// Throws NonConvergence when max_subdivisions is exhausted.
QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec = {});

/// Integral of f over the finite interval [a, b] with the same adaptive rule.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// ---------------------------------------------------------------------------
// Dense symmetric linear algebra
// ---------------------------------------------------------------------------

/// Real symmetric matrix; every write keeps entry(i,j) == entry(j,i).
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n);
    /// Symmetrizes the input as (M + M^T) / 2.
    explicit SymmetricMatrix(const Eigen::MatrixXd& m);

    static SymmetricMatrix identity(std::size_t n);
    /// v v^T
    static SymmetricMatrix outer(std::span<const double> v);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(m_.rows()); }

    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    void set(std::size_t i, std::size_t j, double value);
    void add(std::size_t i, std::size_t j, double value);

    /// Frobenius inner product A . B = tr(A B).
    double dot(const SymmetricMatrix& other) const;
    /// x^T M x
    double quadratic_form(std::span<const double> x) const;

    SymmetricMatrix& operator+=(const SymmetricMatrix& other);
    SymmetricMatrix& operator*=(double s);

    double frobenius_norm() const { return m_.norm(); }
    const Eigen::MatrixXd& matrix() const noexcept { return m_; }

private:
    Eigen::MatrixXd m_;
};

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b);
SymmetricMatrix operator*(double s, SymmetricMatrix a);

struct EigenDecomposition {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // columns, orthonormal
};

EigenDecomposition eig_symmetric(const SymmetricMatrix& m);

/// Factor F with F F^T = A, negative eigenvalues within -1e-9 lambda_max
/// clamped to zero.  Throws NotPsd otherwise.
class GaussianSampler {
public:
    explicit GaussianSampler(const SymmetricMatrix& covariance);

    std::vector<double> operator()(Rng& rng) const;
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(factor_.rows()); }

private:
    Eigen::MatrixXd factor_;
};

/// One draw from N(0, A).
std::vector<double> sample_gaussian_psd(const SymmetricMatrix& a, Rng& rng);

inline constexpr double kPsdTolerance = 1e-9;

}  // namespace ris::numerics
