#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ris/errors.hpp"
#include "ris/numerics.hpp"

namespace ris::numerics {

SymmetricMatrix::SymmetricMatrix(std::size_t n)
    : m_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))) {}

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("SymmetricMatrix: input is not square");
    }
    m_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    SymmetricMatrix out(n);
    out.m_.setIdentity();
    return out;
}

SymmetricMatrix SymmetricMatrix::outer(std::span<const double> v) {
    const Eigen::Map<const Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(v.size()));
    SymmetricMatrix out(v.size());
    out.m_ = x * x.transpose();
    return out;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) {
    m_(i, j) += value;
    if (i != j) {
        m_(j, i) += value;
    }
}

double SymmetricMatrix::dot(const SymmetricMatrix& other) const {
    if (dimension() != other.dimension()) {
        throw DimensionMismatch("SymmetricMatrix::dot: " + std::to_string(dimension()) + " vs " +
                                std::to_string(other.dimension()));
    }
    return m_.cwiseProduct(other.m_).sum();
}

double SymmetricMatrix::quadratic_form(std::span<const double> x) const {
    if (x.size() != dimension()) {
        throw DimensionMismatch("SymmetricMatrix::quadratic_form: vector length mismatch");
    }
    const Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
    return v.dot(m_ * v);
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
    if (dimension() != other.dimension()) {
        throw DimensionMismatch("SymmetricMatrix::operator+=: dimension mismatch");
    }
    m_ += other.m_;
    return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double s) {
    m_ *= s;
    return *this;
}

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) {
    a += b;
    return a;
}

SymmetricMatrix operator*(double s, SymmetricMatrix a) {
    a *= s;
    return a;
}

EigenDecomposition eig_symmetric(const SymmetricMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix());
    if (solver.info() != Eigen::Success) {
        throw SolverFailure("eig_symmetric: eigensolver did not converge");
    }
    EigenDecomposition out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

GaussianSampler::GaussianSampler(const SymmetricMatrix& covariance) {
    const EigenDecomposition e = eig_symmetric(covariance);
    const Eigen::Index n = e.values.size();
    if (n == 0) {
        return;
    }
    const double lmax = e.values(0);
    const double lmin = e.values(n - 1);
    if (lmin < -kPsdTolerance * std::max(lmax, 0.0)) {
        throw NotPsd("GaussianSampler: smallest eigenvalue " + std::to_string(lmin) + " below tolerance");
    }
    Eigen::VectorXd root(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        root(i) = std::sqrt(std::max(e.values(i), 0.0));
    }
    factor_ = e.vectors * root.asDiagonal();
}

std::vector<double> GaussianSampler::operator()(Rng& rng) const {
    const Eigen::Index n = factor_.rows();
    Eigen::VectorXd z(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        z(i) = rng.normal();
    }
    const Eigen::VectorXd x = factor_ * z;
    return {x.data(), x.data() + n};
}

std::vector<double> sample_gaussian_psd(const SymmetricMatrix& a, Rng& rng) {
    return GaussianSampler(a)(rng);
}

}  // namespace ris::numerics
