#include <cmath>
#include <stdexcept>

#include "ris/optim.hpp"

namespace ris::optim {

MaxMinResult greedy_iterative(const ChannelRealization& ch, const SinrBudget& budget, int K,
                              double improvement_threshold) {
    if (K < 2) {
        throw std::invalid_argument("greedy_iterative: grid size must be >= 2");
    }
    if (improvement_threshold < 0.0) {
        throw std::invalid_argument("greedy_iterative: threshold must be nonnegative");
    }
    const std::vector<Complex> v1 = cascade_user1(ch);
    const std::vector<Complex> v2 = cascade_user2(ch);
    const std::size_t L = v1.size();

    std::vector<Complex> grid(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        const double phi = 2.0 * numerics::kPi * k / K;
        grid[static_cast<std::size_t>(k)] = Complex(std::cos(phi), std::sin(phi));
    }

    // Phases live on the grid, starting at index 0.
    std::vector<int> index(L, 0);
    Complex s1(0.0, 0.0);
    Complex s2(0.0, 0.0);
    for (std::size_t l = 0; l < L; ++l) {
        s1 += v1[l];
        s2 += v2[l];
    }
    auto objective = [&](Complex a, Complex b) {
        return std::min(budget.rho1 * std::norm(a), budget.rho2 * std::norm(b));
    };

    MaxMinResult out;
    out.method = Method::GreedyIterative;
    double current = objective(s1, s2);
    out.sweep_objective.push_back(current);
    for (int sweep = 0; sweep < 10000; ++sweep) {
        const double before = current;
        for (std::size_t l = 0; l < L; ++l) {
            const Complex e = grid[static_cast<std::size_t>(index[l])];
            const Complex rest1 = s1 - v1[l] * e;
            const Complex rest2 = s2 - v2[l] * e;
            // a move must beat staying put by more than rounding in the partial sums
            const double stay = objective(rest1 + v1[l] * e, rest2 + v2[l] * e);
            int best_k = index[l];
            double best = stay * (1.0 + 1e-12);
            for (int k = 0; k < K; ++k) {
                const Complex g = grid[static_cast<std::size_t>(k)];
                const double value = objective(rest1 + v1[l] * g, rest2 + v2[l] * g);
                if (value > best) {
                    best = value;
                    best_k = k;
                }
            }
            index[l] = best_k;
            const Complex g = grid[static_cast<std::size_t>(best_k)];
            s1 = rest1 + v1[l] * g;
            s2 = rest2 + v2[l] * g;
        }
        s1 = s2 = Complex(0.0, 0.0);
        for (std::size_t l = 0; l < L; ++l) {
            const Complex g = grid[static_cast<std::size_t>(index[l])];
            s1 += v1[l] * g;
            s2 += v2[l] * g;
        }
        current = objective(s1, s2);
        out.sweep_objective.push_back(current);
        ++out.iterations;
        if (current - before < improvement_threshold * current) {
            break;
        }
    }

    out.phases.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
        out.phases[l] = 2.0 * numerics::kPi * index[l] / K;
    }
    out.achieved = sinr(ch, out.phases, budget);
    return out;
}

}  // namespace ris::optim
