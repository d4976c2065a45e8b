#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a serial twin with the
// same per-element arithmetic order, so the two agree bit-for-bit.

#include "prefdiag/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace prefdiag::kernels {

/// Item x subject incidence, one packed bitset row per item.
struct Incidence {
    std::size_t items = 0;
    std::size_t words = 0;  // 64-bit words per row
    std::vector<std::uint64_t> bits;
    std::vector<std::uint32_t> frequency;

    std::span<const std::uint64_t> row(std::size_t item) const { return {bits.data() + item * words, words}; }
};

Incidence build_incidence(const Dataset& dataset);

/// Fills the n x n row-major Jaccard matrix.
void jaccard_matrix(const Incidence& inc, std::span<double> out);
void jaccard_matrix_serial(const Incidence& inc, std::span<double> out);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;
};

/// All-pairs inverse-square repulsion, magnitude `scale / d^2`. Writes the
/// force on every node and the radial stiffness sum (2 * scale / d^3), which
/// the layout uses to size its steps.
void repulsion(std::span<const Vec2> pos, double scale, std::span<Vec2> force, std::span<double> stiffness);
void repulsion_serial(std::span<const Vec2> pos, double scale, std::span<Vec2> force,
                      std::span<double> stiffness);

/// Node count below which the parallel kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 128;

}  // namespace prefdiag::kernels
