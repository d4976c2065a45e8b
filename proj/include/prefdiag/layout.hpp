#pragma once

#include "prefdiag/diagram.hpp"
#include "prefdiag/kernels.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace prefdiag {

using kernels::Vec2;

struct LayoutParams {
    std::size_t iterations = 500;
    double tolerance = 1e-3;  // max displacement, canvas units
    std::uint64_t seed = 0;
    double width = 1000.0;
    double height = 1000.0;
    double repulsion_scale = 2.0e4;
    double attraction_scale = 1.0;
    double cooling = 0.95;

    /// Throws InvalidArgument if any field is out of range.
    void check() const;
};

struct LayoutResult {
    std::vector<Vec2> positions;  // parallel to PreferenceDiagram::nodes
    bool converged = false;
    double residual = 0.0;        // last max (uncapped) displacement
    std::size_t iterations = 0;

    bool operator==(const LayoutResult&) const = default;
};

struct LayoutTrace {
    std::vector<double> energy;    // after each iteration
    std::vector<bool> capped;      // whether the temperature clipped any step in that iteration
    std::vector<bool> clamped;     // whether any node hit the canvas border
};

/// Positions are kept this far inside the canvas border (fraction of each side).
inline constexpr double kCanvasMargin = 0.02;

/// Force-directed layout: each edge is a spring of rest length 1 and
/// stiffness attraction_scale * weight; all node pairs repel with
/// repulsion_scale / d^2. Steps are Newton-like (force over local stiffness,
/// halved), capped by a temperature that decays by `cooling` per iteration.
/// Stops when the largest uncapped step drops below `tolerance`.
LayoutResult spring_layout(const PreferenceDiagram& diagram, const LayoutParams& params,
                           LayoutTrace* trace = nullptr);

/// Same, from caller-provided initial positions.
LayoutResult spring_layout_from(const PreferenceDiagram& diagram, const LayoutParams& params,
                                std::vector<Vec2> initial, LayoutTrace* trace = nullptr);

/// Seeded random start inside the middle half of the canvas.
std::vector<Vec2> initial_positions(std::size_t count, const LayoutParams& params);

/// Spring plus repulsion potential of a configuration.
double layout_energy(const PreferenceDiagram& diagram, const LayoutParams& params, std::span<const Vec2> positions);

/// Separation at which one spring of the given weight balances the two-body
/// repulsion: attraction * weight * (d - 1) = repulsion / d^2.
double two_body_equilibrium(double weight, const LayoutParams& params);

}  // namespace prefdiag
