#pragma once

#include "prefdiag/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace prefdiag {

/// Planted-partition survey generator. Subjects pick mostly from a home
/// cluster and, with probability `switch_prob` per pick, from one away
/// cluster. `primary_select_prob` is the chance a non-switch pick is taken
/// from home rather than from the whole catalog (1 = no background noise).
struct SynthParams {
    std::size_t num_items = 50;
    std::size_t num_subjects = 32;
    std::size_t num_planted_clusters = 4;
    double primary_select_prob = 1.0;
    double switch_prob = 0.15;
    std::uint64_t seed = 7;

    void check() const;
};

inline constexpr std::size_t kMinSelection = 2;
inline constexpr std::size_t kMaxSelection = 8;

struct PlantedTruth {
    std::size_t k = 0;
    std::vector<std::size_t> item_cluster;         // item -> planted cluster
    std::vector<std::size_t> home;                 // subject -> home cluster
    std::vector<std::optional<std::size_t>> away;  // subject -> away cluster (none when k == 1)

    bool operator==(const PlantedTruth&) const = default;
};

struct SynthResult {
    Dataset dataset;
    PlantedTruth truth;
};

/// Deterministic for a given seed.
SynthResult generate(const SynthParams& params);

}  // namespace prefdiag
