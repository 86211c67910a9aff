#include <cmath>
#include <stdexcept>

#include "ris/errors.hpp"
#include "ris/optim.hpp"

namespace ris::optim {

RandomizationResult gaussian_randomization(const SymmetricMatrix& A_star, const QuadraticFormPair& forms, int K,
                                           std::uint64_t seed, std::uint64_t stream) {
    if (K < 1) {
        throw std::invalid_argument("gaussian_randomization: K must be >= 1");
    }
    const std::size_t n = A_star.dimension();
    if (n == 0 || n % 2 != 0 || forms.F1.dimension() != n || forms.F2.dimension() != n) {
        throw DimensionMismatch("gaussian_randomization: A_star and forms disagree in dimension");
    }
    const std::size_t L = n / 2;
    const numerics::GaussianSampler sampler{SymmetricMatrix(A_star.matrix())};

    RandomizationResult best;
    best.objective = -1.0;
    best.candidates = K;
    for (int k = 0; k < K; ++k) {
        Rng rng(seed, stream, static_cast<std::uint64_t>(k));
        std::vector<double> xi = sampler(rng);
        double largest = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            largest = std::max(largest, std::hypot(xi[2 * l], xi[2 * l + 1]));
        }
        for (std::size_t l = 0; l < L; ++l) {
            const double r = std::hypot(xi[2 * l], xi[2 * l + 1]);
            if (!(r > 1e-12 * largest)) {
                // degenerate pair: any point on the circle is as good as another
                const double phi = 2.0 * numerics::kPi * rng.uniform();
                xi[2 * l] = std::cos(phi);
                xi[2 * l + 1] = std::sin(phi);
            } else {
                xi[2 * l] /= r;
                xi[2 * l + 1] /= r;
            }
        }
        const double score = std::min(forms.F1.quadratic_form(xi), forms.F2.quadratic_form(xi));
        if (score > best.objective) {
            best.objective = score;
            best.phases.resize(L);
            for (std::size_t l = 0; l < L; ++l) {
                best.phases[l] = wrap_phase(std::atan2(xi[2 * l + 1], xi[2 * l]));
            }
        }
    }
    return best;
}

MaxMinResult sdp_relax(const ChannelRealization& ch, const SinrBudget& budget, int K, std::uint64_t seed,
                       std::uint64_t stream, const SdpOptions& opts) {
    const QuadraticFormPair forms = build_quadratic_forms(ch, budget);
    const SdpResult sdp = sdp_maxmin_joint(forms, opts);
    const RandomizationResult pick = gaussian_randomization(sdp.A_star, forms, K, seed, stream);
    MaxMinResult out;
    out.t_star = sdp.t_star;
    out.A_star = sdp.A_star;
    out.phases = pick.phases;
    out.achieved = sinr_nonreciprocal(ch, out.phases, budget);
    out.method = Method::SdpRelax;
    out.iterations = sdp.iterations;
    out.feasibility_gap = sdp.t_star - std::min(forms.F1.dot(sdp.A_star), forms.F2.dot(sdp.A_star));
    return out;
}

}  // namespace ris::optim
