#include <cmath>
#include <stdexcept>

#include "ris/optim.hpp"

namespace ris::optim {

namespace {

// rho |sum_l v_l e^{j phi_l}|^2 = (c.alpha)^2 + (d.alpha)^2 with
// theta_l = -arg v_l:  c pair = a (cos theta, sin theta), d pair = a (-sin theta, cos theta).
SymmetricMatrix form_for(const std::vector<Complex>& v, double rho) {
    const std::size_t L = v.size();
    std::vector<double> c(2 * L);
    std::vector<double> d(2 * L);
    const double scale = std::sqrt(rho);
    for (std::size_t l = 0; l < L; ++l) {
        const double a = scale * std::abs(v[l]);
        const double theta = -std::arg(v[l]);
        c[2 * l] = a * std::cos(theta);
        c[2 * l + 1] = a * std::sin(theta);
        d[2 * l] = -a * std::sin(theta);
        d[2 * l + 1] = a * std::cos(theta);
    }
    return SymmetricMatrix::outer(c) + SymmetricMatrix::outer(d);
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
    case Method::SdpRelax:
        return "sdp";
    case Method::GreedyIterative:
        return "greedy";
    case Method::U1Phase:
        return "u1";
    case Method::Random:
        return "random";
    }
    return "?";
}

PhaseVector optimal_phase_reciprocal(const ChannelRealization& ch) {
    if (ch.reciprocity != Reciprocity::Reciprocal) {
        throw std::invalid_argument("optimal_phase_reciprocal: non-reciprocal realization");
    }
    PhaseVector phi(ch.size());
    for (std::size_t l = 0; l < phi.size(); ++l) {
        phi[l] = wrap_phase(-std::arg(ch.h[l] * ch.g[l]));
    }
    return phi;
}

QuadraticFormPair build_quadratic_forms(const ChannelRealization& ch, const SinrBudget& budget) {
    if (ch.reciprocity != Reciprocity::NonReciprocal) {
        throw std::invalid_argument("build_quadratic_forms: reciprocal realization");
    }
    return {form_for(cascade_user1(ch), budget.rho1), form_for(cascade_user2(ch), budget.rho2)};
}

std::vector<double> phases_to_vector(const PhaseVector& phases) {
    std::vector<double> alpha(2 * phases.size());
    for (std::size_t l = 0; l < phases.size(); ++l) {
        alpha[2 * l] = std::cos(phases[l]);
        alpha[2 * l + 1] = std::sin(phases[l]);
    }
    return alpha;
}

PhaseVector baseline_phases(const ChannelRealization& ch, Method kind, Rng& rng) {
    PhaseVector phi(ch.size());
    if (kind == Method::U1Phase) {
        const auto v = cascade_user1(ch);
        for (std::size_t l = 0; l < phi.size(); ++l) {
            phi[l] = wrap_phase(-std::arg(v[l]));
        }
        return phi;
    }
    if (kind != Method::Random) {
        throw std::invalid_argument("baseline_phases: kind must be U1Phase or Random");
    }
    for (auto& p : phi) {
        p = 2.0 * numerics::kPi * rng.uniform();
    }
    return phi;
}

}  // namespace ris::optim
