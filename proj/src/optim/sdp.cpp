// Primal log-barrier method for
//
//   max  min(F1 . A, F2 . A)   s.t.  I_l . A = 1 (l = 1..L),  A PSD.
//
// The min is linearized with two slacks: X = diag(A, u1, u2) PSD,
//   max  F1 . A - u1   s.t.  (F1 - F2) . A - u1 + u2 = 0,  I_l . A = 1,
// so at the optimum u1 - u2 = F1 . A - F2 . A and the objective is the
// smaller SINR.  The dual of the original problem is
//   min  sum_l y_l   s.t.  sum_l y_l I_l - (1 - y0) F1 - y0 F2 PSD,  y0 in [0, 1],
// which gives an upper bound from any multiplier estimate after a diagonal
// repair; the primal iterate gives the lower bound.

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "ris/errors.hpp"
#include "ris/optim.hpp"

namespace ris::optim {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

class BarrierSolver {
public:
    BarrierSolver(const QuadraticFormPair& forms, const SdpOptions& opts) : opts_(opts) {
        if (forms.F1.dimension() != forms.F2.dimension() || forms.F1.dimension() % 2 != 0 ||
            forms.F1.dimension() == 0) {
            throw DimensionMismatch("sdp: F1 and F2 must share an even, nonzero dimension");
        }
        m2_ = static_cast<int>(forms.F1.dimension());
        L_ = m2_ / 2;
        n_ = m2_ + 2;
        scale_ = 0.5 * std::max(forms.F1.matrix().trace(), forms.F2.matrix().trace());
        if (!(scale_ > 0.0)) {
            throw std::invalid_argument("sdp: both quadratic forms vanish");
        }
        G1_ = forms.F1.matrix() / scale_;
        G2_ = forms.F2.matrix() / scale_;

        C_ = MatrixXd::Zero(n_, n_);
        C_.topLeftCorner(m2_, m2_) = G1_;
        C_(m2_, m2_) = -1.0;
        A0_ = MatrixXd::Zero(n_, n_);
        A0_.topLeftCorner(m2_, m2_) = G1_ - G2_;
        A0_(m2_, m2_) = -1.0;
        A0_(m2_ + 1, m2_ + 1) = 1.0;

        X_ = MatrixXd::Zero(n_, n_);
        X_.topLeftCorner(m2_, m2_) = 0.5 * MatrixXd::Identity(m2_, m2_);
        const double d = 0.5 * (G1_ - G2_).trace();
        X_(m2_, m2_) = std::max(d, 0.0) + 1.0;
        X_(m2_ + 1, m2_ + 1) = X_(m2_, m2_) - d;
        y_ = VectorXd::Zero(L_ + 1);
        tau_ = static_cast<double>(n_);
        update_bounds();
    }

    double scale() const { return scale_; }
    double lower() const { return lower_; }
    double upper() const { return upper_; }
    int iterations() const { return iterations_; }
    const MatrixXd& best_A() const { return best_A_; }

    // Follows the central path until the certified gap meets gap_tolerance
    // or stop(lower, upper) returns true.
    template <class Stop>
    void run(Stop stop) {
        for (int outer = 0; outer < 64; ++outer) {
            if (stop(lower_, upper_) || converged()) {
                return;
            }
            bool stalled = false;
            bool centered = false;
            double previous = std::numeric_limits<double>::infinity();
            int idle = 0;
            while (iterations_ < opts_.max_newton_steps) {
                const double decrement = newton_step(stalled);
                ++iterations_;
                update_bounds();
                if (stop(lower_, upper_) || converged()) {
                    return;
                }
                idle = gain_ > 1e-12 ? 0 : idle + 1;
                stalled = stalled || idle >= 8;
                // Inside the quadratic region each step should square the
                // decrement; one that stops shrinking has hit the rounding
                // floor of the ill-conditioned iterate.
                if (stalled || 0.5 * decrement <= opts_.newton_tolerance ||
                    (decrement < 1e-2 && decrement > 0.25 * previous)) {
                    centered = !stalled;
                    break;
                }
                previous = decrement;
            }
            if (!centered) {
                break;
            }
            tau_ *= opts_.barrier_growth;
        }
        // No further progress is possible; the bounds are still certified.
        if (upper_ - lower_ <= opts_.floor_gap_tolerance * std::max(lower_, 1e-300)) {
            return;
        }
        fail(iterations_ >= opts_.max_newton_steps ? "Newton step limit reached" : "barrier iteration stalled");
    }

private:
    bool converged() const { return upper_ - lower_ <= opts_.gap_tolerance * std::max(lower_, 1e-300); }

    [[noreturn]] void fail(const char* why) const {
        std::ostringstream os;
        os << "sdp: " << why << " (tau " << tau_ << ", lower " << lower_ * scale_ << ", upper " << upper_ * scale_
           << ", max residual " << max_residual() << ")";
        throw SolverFailure(os.str());
    }

    VectorXd residual(const MatrixXd& X) const {
        VectorXd r(L_ + 1);
        r(0) = -A0_.cwiseProduct(X).sum();
        for (int l = 0; l < L_; ++l) {
            r(l + 1) = 1.0 - X(2 * l, 2 * l) - X(2 * l + 1, 2 * l + 1);
        }
        return r;
    }

    double max_residual() const { return residual(X_).cwiseAbs().maxCoeff(); }

    // Barrier objective tau (-C . X) - log det X; +inf outside the cone.
    double merit(const MatrixXd& X) const {
        Eigen::LLT<MatrixXd> llt(X);
        if (llt.info() != Eigen::Success) {
            return std::numeric_limits<double>::infinity();
        }
        const auto& Lm = llt.matrixLLT();
        double logdet = 0.0;
        for (int i = 0; i < n_; ++i) {
            const double d = Lm(i, i);
            if (!(d > 0.0)) {
                return std::numeric_limits<double>::infinity();
            }
            logdet += 2.0 * std::log(d);
        }
        return -tau_ * C_.cwiseProduct(X).sum() - logdet;
    }

    double newton_step(bool& stalled) {
        const MatrixXd XC = X_ * C_;
        const MatrixXd Q = XC * X_;
        const MatrixXd P0 = X_ * A0_ * X_;
        const int m = L_ + 1;

        MatrixXd M(m, m);
        M(0, 0) = A0_.cwiseProduct(P0).sum();
        for (int l = 0; l < L_; ++l) {
            const int i = 2 * l;
            M(0, l + 1) = M(l + 1, 0) = P0(i, i) + P0(i + 1, i + 1);
            for (int k = 0; k <= l; ++k) {
                const int j = 2 * k;
                const double v = X_(i, j) * X_(i, j) + X_(i, j + 1) * X_(i, j + 1) + X_(i + 1, j) * X_(i + 1, j) +
                                 X_(i + 1, j + 1) * X_(i + 1, j + 1);
                M(l + 1, k + 1) = M(k + 1, l + 1) = v;
            }
        }

        const MatrixXd T = tau_ * Q + X_;
        const VectorXd r = residual(X_);
        VectorXd rhs(m);
        rhs(0) = A0_.cwiseProduct(T).sum() - r(0);
        for (int l = 0; l < L_; ++l) {
            rhs(l + 1) = T(2 * l, 2 * l) + T(2 * l + 1, 2 * l + 1) - r(l + 1);
        }
        const Eigen::LDLT<MatrixXd> ldlt(M);
        const VectorXd nu = ldlt.solve(rhs);
        if (!nu.allFinite()) {
            stalled = true;
            return 0.0;
        }

        MatrixXd dX = T - nu(0) * P0;
        for (int l = 0; l < L_; ++l) {
            const auto a = X_.col(2 * l);
            const auto b = X_.col(2 * l + 1);
            dX.noalias() -= nu(l + 1) * (a * a.transpose() + b * b.transpose());
        }
        dX = 0.5 * (dX + dX.transpose()).eval();
        y_ = nu / tau_;

        const Eigen::LLT<MatrixXd> llt(X_);
        const MatrixXd G = llt.solve(dX);
        const double decrement = std::max(G.cwiseProduct(G.transpose()).sum(), 0.0);

        // Inside the quadratic-convergence region the full step is safe.
        if (decrement < 0.04) {
            const MatrixXd trial = X_ + dX;
            if (std::isfinite(merit(trial))) {
                X_ = trial;
                gain_ = std::numeric_limits<double>::infinity();
                return decrement;
            }
        }
        const double f0 = merit(X_);
        double s = 1.0;
        for (int k = 0; k < 60; ++k) {
            // below this the accepted step would not change f at all
            if (0.25 * s * decrement <= 1e-14 * std::abs(f0)) {
                break;
            }
            const MatrixXd trial = X_ + s * dX;
            const double f = merit(trial);
            if (std::isfinite(f) && f <= f0 - 0.25 * s * decrement) {
                X_ = trial;
                gain_ = (f0 - f) / std::max(std::abs(f0), 1.0);
                return decrement;
            }
            s *= 0.5;
        }
        stalled = true;
        gain_ = 0.0;
        return decrement;
    }

    void update_bounds() {
        const MatrixXd A = X_.topLeftCorner(m2_, m2_);
        // Rescale pairs onto the constraint set so the lower bound is exact.
        VectorXd w(m2_);
        for (int l = 0; l < L_; ++l) {
            const double t = A(2 * l, 2 * l) + A(2 * l + 1, 2 * l + 1);
            w(2 * l) = w(2 * l + 1) = t > 0.0 ? 1.0 / std::sqrt(t) : 0.0;
        }
        const MatrixXd An = w.asDiagonal() * A * w.asDiagonal();
        const double lo = std::min(G1_.cwiseProduct(An).sum(), G2_.cwiseProduct(An).sum());
        if (lo > lower_ || best_A_.size() == 0) {
            lower_ = std::max(lo, lower_);
            best_A_ = An;
        }

        const double y0 = std::clamp(y_(0), 0.0, 1.0);
        MatrixXd Z = -(1.0 - y0) * G1_ - y0 * G2_;
        double sum_y = 0.0;
        for (int l = 0; l < L_; ++l) {
            Z(2 * l, 2 * l) += y_(l + 1);
            Z(2 * l + 1, 2 * l + 1) += y_(l + 1);
            sum_y += y_(l + 1);
        }
        const Eigen::SelfAdjointEigenSolver<MatrixXd> es(Z, Eigen::EigenvaluesOnly);
        const double shift = std::max(0.0, -es.eigenvalues()(0));
        const double up = sum_y + L_ * shift;
        if (std::isfinite(up)) {
            upper_ = std::min(upper_, up);
        }
    }

    SdpOptions opts_;
    int m2_ = 0;
    int L_ = 0;
    int n_ = 0;
    double scale_ = 1.0;
    MatrixXd G1_;
    MatrixXd G2_;
    MatrixXd C_;
    MatrixXd A0_;
    MatrixXd X_;
    VectorXd y_;
    double tau_ = 1.0;
    double lower_ = -std::numeric_limits<double>::infinity();
    double upper_ = std::numeric_limits<double>::infinity();
    MatrixXd best_A_;
    int iterations_ = 0;
    double gain_ = 0.0;  // relative merit decrease of the last step
};

}  // namespace

namespace {

// One element: a complex scalar form [[a, -b], [b, a]] is the constant a on
// the whole feasible set, so the barrier has nothing to optimize.
bool constant_on_feasible_set(const QuadraticFormPair& forms) {
    if (forms.F1.dimension() != 2 || forms.F2.dimension() != 2) {
        return false;
    }
    for (const SymmetricMatrix* F : {&forms.F1, &forms.F2}) {
        const auto& m = F->matrix();
        const double tol = 1e-12 * (std::abs(m(0, 0)) + std::abs(m(1, 1)));
        if (std::abs(m(0, 0) - m(1, 1)) > tol || std::abs(m(0, 1)) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

SdpResult sdp_maxmin_joint(const QuadraticFormPair& forms, const SdpOptions& opts) {
    if (constant_on_feasible_set(forms)) {
        SdpResult out;
        out.A_star = 0.5 * SymmetricMatrix::identity(2);
        out.t_star = std::min(forms.F1.dot(out.A_star), forms.F2.dot(out.A_star));
        out.upper_bound = out.t_star;
        return out;
    }
    BarrierSolver solver(forms, opts);
    solver.run([](double, double) { return false; });
    SdpResult out;
    // The certified upper bound dominates every rank-one point exactly; the
    // returned A reaches it to within the gap tolerance.
    out.t_star = solver.upper() * solver.scale();
    out.upper_bound = out.t_star;
    out.A_star = SymmetricMatrix(solver.best_A());
    out.iterations = solver.iterations();
    return out;
}

FeasibilityResult sdp_feasibility(const QuadraticFormPair& forms, double t, const SdpOptions& opts) {
    if (constant_on_feasible_set(forms)) {
        FeasibilityResult out;
        out.A = 0.5 * SymmetricMatrix::identity(2);
        const double value = std::min(forms.F1.dot(out.A), forms.F2.dot(out.A));
        out.feasible = value >= t;
        out.slack = value - t;
        return out;
    }
    BarrierSolver solver(forms, opts);
    const double target = t / solver.scale();
    solver.run([target](double lower, double upper) { return lower >= target || upper < target; });
    FeasibilityResult out;
    out.feasible = solver.lower() >= target;
    out.slack = (out.feasible ? solver.lower() : solver.upper()) * solver.scale() - t;
    out.A = SymmetricMatrix(solver.best_A());
    out.iterations = solver.iterations();
    return out;
}

SdpResult sdp_maxmin(const QuadraticFormPair& forms, const SdpOptions& opts) {
    const std::size_t n = forms.F1.dimension();
    const SymmetricMatrix a0 = 0.5 * SymmetricMatrix::identity(n);
    double t_s = forms.F1.dot(a0);
    if (!(t_s > 0.0)) {
        t_s = forms.F2.dot(a0);
    }

    SdpResult out;
    auto check = [&](double t) {
        const FeasibilityResult r = sdp_feasibility(forms, t, opts);
        out.iterations += r.iterations;
        if (r.feasible) {
            out.A_star = r.A;
        }
        return r.feasible;
    };

    // Bracket: double or halve the trial value until the answer flips.
    double t_lo = 0.0;
    double t_hi = 0.0;
    if (check(t_s)) {
        t_lo = t_s;
        double t = 2.0 * t_s;
        for (int k = 0; k < 200 && check(t); ++k) {
            t_lo = t;
            t *= 2.0;
        }
        t_hi = t;
    } else {
        t_hi = t_s;
        double t = 0.5 * t_s;
        int k = 0;
        for (; k < 200 && !check(t); ++k) {
            t_hi = t;
            t *= 0.5;
        }
        t_lo = k < 200 ? t : 0.0;
    }

    while (t_hi - t_lo > opts.tolerance * t_lo) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (check(mid)) {
            t_lo = mid;
        } else {
            t_hi = mid;
        }
    }
    out.t_star = t_lo;
    out.upper_bound = t_hi;
    if (out.A_star.dimension() == 0) {
        out.A_star = a0;
    }
    return out;
}

}  // namespace ris::optim
