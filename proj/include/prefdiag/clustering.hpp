#pragma once

#include "prefdiag/dataset.hpp"
#include "prefdiag/similarity.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace prefdiag {

/// Hard partition of the catalog into k clusters, each with a medoid.
struct Clustering {
    std::size_t k = 0;
    std::vector<std::size_t> assignment;  // item -> cluster
    std::vector<ItemId> medoids;          // cluster -> item
    double objective = 0.0;               // sum over clusters of M(cluster, medoid)

    std::vector<ItemId> members(std::size_t cluster) const;
    bool operator==(const Clustering&) const = default;
};

struct ClusteringParams {
    std::size_t k = 2;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 100;
    std::size_t restarts = 10;
};

/// Total resemblance of `item` to the other members: sum of J(other, item).
/// Throws InvalidArgument if `item` is not among `members`.
double within_cluster_resemblance(const SimilarityMatrix& sim, std::span<const ItemId> members, ItemId item);

/// Member with the largest within-cluster resemblance; lowest id on ties.
ItemId compute_medoid(const SimilarityMatrix& sim, std::span<const ItemId> members);

/// Each item goes to the medoid it resembles most (lowest cluster index on
/// ties). A medoid is always placed in its own cluster.
std::vector<std::size_t> assign_to_medoids(const SimilarityMatrix& sim, std::span<const ItemId> medoids);

/// Objective recomputed from an assignment and its medoids.
double clustering_objective(const SimilarityMatrix& sim, std::span<const std::size_t> assignment,
                            std::span<const ItemId> medoids);

/// Objective values observed after every medoid update and every
/// reassignment, one series per restart.
struct KMedoidsTrace {
    std::vector<std::vector<double>> objectives;
};

/// Alternating k-medoids with seeded random restarts. Restarts run in
/// parallel; restart r uses sub-seed `seed ^ r`, and the best objective wins
/// (lowest restart index on ties), so results do not depend on scheduling.
Clustering k_medoids(const SimilarityMatrix& sim, const ClusteringParams& params, KMedoidsTrace* trace = nullptr);

}  // namespace prefdiag
