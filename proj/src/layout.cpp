#include "prefdiag/layout.hpp"

#include "prefdiag/errors.hpp"
#include "prefdiag/random.hpp"

#include <algorithm>
#include <cmath>

namespace prefdiag {

void LayoutParams::check() const {
    if (iterations == 0) throw InvalidArgument("layout needs at least one iteration");
    if (!(tolerance > 0.0)) throw InvalidArgument("layout tolerance must be positive");
    if (!(width > 0.0) || !(height > 0.0)) throw InvalidArgument("canvas must be positive");
    if (!(repulsion_scale > 0.0) || !(attraction_scale > 0.0)) {
        throw InvalidArgument("force scales must be positive");
    }
    if (!(cooling > 0.0 && cooling < 1.0)) throw InvalidArgument("cooling must lie in (0, 1)");
}

std::vector<Vec2> initial_positions(std::size_t count, const LayoutParams& params) {
    Rng rng(params.seed);
    std::vector<Vec2> pos(count);
    for (auto& p : pos) {
        p.x = params.width * (0.25 + 0.5 * uniform_unit(rng));
        p.y = params.height * (0.25 + 0.5 * uniform_unit(rng));
    }
    return pos;
}

double layout_energy(const PreferenceDiagram& diagram, const LayoutParams& params, std::span<const Vec2> positions) {
    double energy = 0.0;
    for (const auto& e : diagram.edges) {
        const double d = std::hypot(positions[e.a].x - positions[e.b].x, positions[e.a].y - positions[e.b].y);
        energy += 0.5 * params.attraction_scale * e.weight * (d - 1.0) * (d - 1.0);
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            const double d = std::hypot(positions[i].x - positions[j].x, positions[i].y - positions[j].y);
            energy += params.repulsion_scale / std::max(d, 1e-6);
        }
    }
    return energy;
}

double two_body_equilibrium(double weight, const LayoutParams& params) {
    // Root of k d^3 - k d^2 - R = 0 for d > 1; the cubic is increasing there.
    const double k = params.attraction_scale * weight;
    const double r = params.repulsion_scale;
    auto g = [&](double d) { return k * d * d * (d - 1.0) - r; };
    double lo = 1.0;
    double hi = 2.0;
    while (g(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

LayoutResult spring_layout_from(const PreferenceDiagram& diagram, const LayoutParams& params,
                                std::vector<Vec2> initial, LayoutTrace* trace) {
    params.check();
    const std::size_t n = diagram.nodes.size();
    if (initial.size() != n) {
        throw InvalidArgument("initial positions do not match the node count");
    }
    for (const auto& e : diagram.edges) {
        if (e.a >= n || e.b >= n) throw ConsistencyError("edge refers to a missing node");
    }
    LayoutResult result;
    result.positions = std::move(initial);
    auto& pos = result.positions;
    if (n == 0) {
        result.converged = true;
        return result;
    }
    if (n == 1) {
        pos[0] = {0.5 * params.width, 0.5 * params.height};
        result.converged = true;
        result.iterations = 1;
        return result;
    }

    const double x_lo = kCanvasMargin * params.width;
    const double x_hi = (1.0 - kCanvasMargin) * params.width;
    const double y_lo = kCanvasMargin * params.height;
    const double y_hi = (1.0 - kCanvasMargin) * params.height;
    double temperature = 0.1 * std::min(params.width, params.height);

    std::vector<Vec2> force(n);
    std::vector<double> stiffness(n);
    for (std::size_t iter = 1; iter <= params.iterations; ++iter) {
        kernels::repulsion(pos, params.repulsion_scale, force, stiffness);
        for (const auto& e : diagram.edges) {
            const double dx = pos[e.b].x - pos[e.a].x;
            const double dy = pos[e.b].y - pos[e.a].y;
            const double d = std::hypot(dx, dy);
            const double k = params.attraction_scale * e.weight;
            if (d > 0.0) {
                const double f = k * (d - 1.0) / d;
                force[e.a].x += f * dx;
                force[e.a].y += f * dy;
                force[e.b].x -= f * dx;
                force[e.b].y -= f * dy;
            }
            stiffness[e.a] += k;
            stiffness[e.b] += k;
        }

        double residual = 0.0;
        bool capped = false;
        bool clamped = false;
        for (std::size_t i = 0; i < n; ++i) {
            const double sx = 0.5 * force[i].x / stiffness[i];
            const double sy = 0.5 * force[i].y / stiffness[i];
            const double len = std::hypot(sx, sy);
            // Steps that only push into the border do not count as motion.
            residual = std::max(residual, std::hypot(std::clamp(pos[i].x + sx, x_lo, x_hi) - pos[i].x,
                                                     std::clamp(pos[i].y + sy, y_lo, y_hi) - pos[i].y));
            const double scale = len > temperature ? temperature / len : 1.0;
            capped = capped || len > temperature;
            const Vec2 next{pos[i].x + sx * scale, pos[i].y + sy * scale};
            pos[i] = {std::clamp(next.x, x_lo, x_hi), std::clamp(next.y, y_lo, y_hi)};
            clamped = clamped || pos[i] != next;
        }
        result.iterations = iter;
        result.residual = residual;
        if (trace) {
            trace->energy.push_back(layout_energy(diagram, params, pos));
            trace->capped.push_back(capped);
            trace->clamped.push_back(clamped);
        }
        if (residual < params.tolerance) {
            result.converged = true;
            break;
        }
        temperature *= params.cooling;
    }
    return result;
}

LayoutResult spring_layout(const PreferenceDiagram& diagram, const LayoutParams& params, LayoutTrace* trace) {
    params.check();
    return spring_layout_from(diagram, params, initial_positions(diagram.nodes.size(), params), trace);
}

}  // namespace prefdiag
