#include "prefdiag/kernels.hpp"

#include <bit>
#include <cmath>

namespace prefdiag::kernels {

Incidence build_incidence(const Dataset& dataset) {
    Incidence inc;
    inc.items = dataset.catalog_size();
    inc.words = (dataset.num_subjects() + 63) / 64;
    inc.bits.assign(inc.items * inc.words, 0);
    inc.frequency.assign(inc.items, 0);
    for (const auto& r : dataset.responses()) {
        const std::size_t word = r.subject.index / 64;
        const std::uint64_t mask = std::uint64_t{1} << (r.subject.index % 64);
        for (auto item : r.selected) {
            inc.bits[item.index * inc.words + word] |= mask;
            ++inc.frequency[item.index];
        }
    }
    return inc;
}

namespace {

inline double jaccard_entry(const Incidence& inc, std::size_t i, std::size_t j) {
    const auto a = inc.row(i);
    const auto b = inc.row(j);
    std::uint64_t both = 0;
    for (std::size_t w = 0; w < inc.words; ++w) {
        both += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
    }
    const std::uint64_t either = inc.frequency[i] + inc.frequency[j] - both;
    return either == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(either);
}

inline void repulsion_on(std::span<const Vec2> pos, double scale, std::size_t i, Vec2& f, double& k) {
    constexpr double min_dist = 1e-6;
    f = {};
    k = 0.0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
        if (j == i) continue;
        double dx = pos[i].x - pos[j].x;
        double dy = pos[i].y - pos[j].y;
        double d = std::hypot(dx, dy);
        if (d < min_dist) {
            // Coincident nodes: separate along a fixed, index-dependent direction.
            const double angle = static_cast<double>((i < j ? i * 31 + j : j * 31 + i) % 360) * (M_PI / 180.0);
            const double sign = i < j ? 1.0 : -1.0;
            dx = sign * std::cos(angle) * min_dist;
            dy = sign * std::sin(angle) * min_dist;
            d = min_dist;
        }
        const double inv_d3 = 1.0 / (d * d * d);
        f.x += scale * dx * inv_d3;
        f.y += scale * dy * inv_d3;
        k += 2.0 * scale * inv_d3;
    }
}

}  // namespace

void jaccard_matrix(const Incidence& inc, std::span<double> out) {
    const auto n = static_cast<std::int64_t>(inc.items);
#pragma omp parallel for schedule(dynamic, 8) if (inc.items >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            out[static_cast<std::size_t>(i * n + j)] =
                jaccard_entry(inc, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
}

void jaccard_matrix_serial(const Incidence& inc, std::span<double> out) {
    const std::size_t n = inc.items;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = jaccard_entry(inc, i, j);
        }
    }
}

void repulsion(std::span<const Vec2> pos, double scale, std::span<Vec2> force, std::span<double> stiffness) {
    const auto n = static_cast<std::int64_t>(pos.size());
#pragma omp parallel for schedule(static) if (pos.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        repulsion_on(pos, scale, u, force[u], stiffness[u]);
    }
}

void repulsion_serial(std::span<const Vec2> pos, double scale, std::span<Vec2> force,
                      std::span<double> stiffness) {
    for (std::size_t i = 0; i < pos.size(); ++i) {
        repulsion_on(pos, scale, i, force[i], stiffness[i]);
    }
}

}  // namespace prefdiag::kernels
