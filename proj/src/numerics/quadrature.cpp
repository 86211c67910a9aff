#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "ris/errors.hpp"
#include "ris/numerics.hpp"

namespace ris::numerics {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    int piece;
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

struct Rule {
    double value;
    double error;
};

Rule gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double fv1[7];
    double fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        kronrod += kWgk[j] * (fv1[j] + fv2[j]);
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (fv1[j] + fv2[j]);
        }
    }
    const double mean = 0.5 * kronrod;
    double asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    }
    asc *= std::abs(half);
    const double value = kronrod * half;
    double error = std::abs((kronrod - gauss) * half);
    if (asc != 0.0 && error != 0.0) {
        error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
    }
    return {value, error};
}

QuadratureResult adaptive(const std::vector<Integrand>& pieces, const std::vector<std::pair<double, double>>& ranges,
                          const QuadratureSpec& spec) {
    std::priority_queue<Segment> queue;
    double total = 0.0;
    double total_error = 0.0;
    // Segments too narrow to split further keep their contribution here.
    double frozen_error = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Rule r = gauss_kronrod(pieces[i], ranges[i].first, ranges[i].second);
        queue.push({static_cast<int>(i), ranges[i].first, ranges[i].second, r.value, r.error});
        total += r.value;
        total_error += r.error;
    }
    int subdivisions = 0;
    auto converged = [&] {
        return total_error <= std::max(spec.absolute_tolerance, spec.relative_tolerance * std::abs(total));
    };
    while (!converged()) {
        if (queue.empty()) {
            break;
        }
        if (subdivisions >= spec.max_subdivisions) {
            throw NonConvergence("quadrature: subdivision limit reached", total, total_error);
        }
        const Segment s = queue.top();
        queue.pop();
        const double mid = 0.5 * (s.a + s.b);
        if (!(mid > s.a && mid < s.b) ||
            (s.b - s.a) < 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(s.a), std::abs(s.b))) {
            frozen_error += s.error;
            continue;
        }
        const Integrand& f = pieces[static_cast<std::size_t>(s.piece)];
        const Rule left = gauss_kronrod(f, s.a, mid);
        const Rule right = gauss_kronrod(f, mid, s.b);
        total += left.value + right.value - s.value;
        total_error += left.error + right.error - s.error;
        queue.push({s.piece, s.a, mid, left.value, left.error});
        queue.push({s.piece, mid, s.b, right.value, right.error});
        ++subdivisions;
    }
    // Re-sum to shed drift accumulated by the incremental updates.
    double value = 0.0;
    double error = frozen_error;
    while (!queue.empty()) {
        value += queue.top().value;
        error += queue.top().error;
        queue.pop();
    }
    return {value, error, subdivisions};
}

}  // namespace

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec) {
    // t in (0, 1/2]: x = t / (1 - t), dx = dt / (1 - t)^2
    // r in (0, 1/2]: x = (1 - r) / r, dx = dr / r^2
    const Integrand lower = [&f](double t) {
        const double u = 1.0 - t;
        return f(t / u) / (u * u);
    };
    const Integrand upper = [&f](double r) {
        const double value = f((1.0 - r) / r);
        if (value == 0.0) {
            return 0.0;
        }
        return value / (r * r);
    };
    return adaptive({lower, upper}, {{0.0, 0.5}, {0.0, 0.5}}, spec);
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    if (a == b) {
        return {};
    }
    if (a > b) {
        QuadratureResult r = integrate(f, b, a, spec);
        r.value = -r.value;
        return r;
    }
    return adaptive({f}, {{a, b}}, spec);
}

}  // namespace ris::numerics
