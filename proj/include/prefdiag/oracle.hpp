#pragma once

// Brute-force reference computations for the test suites. Nothing here
// reuses the production code paths it is meant to check.

#include "prefdiag/clustering.hpp"
#include "prefdiag/dataset.hpp"
#include "prefdiag/similarity.hpp"
#include "prefdiag/synth.hpp"

#include <cstddef>
#include <vector>

namespace prefdiag::oracle {

/// Jaccard by a linear scan of every response, exact counts.
CountRatio oracle_jaccard(const Dataset& dataset, ItemId i, ItemId j);

/// Preference strength in its general form: records naming both the subject
/// and the item over records naming the item. Valid for multi-response data.
CountRatio general_preference_strength(const Dataset& dataset, SubjectId subject, ItemId item);

struct BestClustering {
    std::vector<std::size_t> partition;  // item -> block
    double objective = 0.0;
};

inline constexpr std::size_t kMaxOracleItems = 10;

/// Exhaustive maximum of sum over blocks of max-member within-block
/// resemblance, over all partitions into exactly k nonempty blocks.
/// Throws InfeasibleOracle beyond kMaxOracleItems items.
BestClustering oracle_best_clustering(const SimilarityMatrix& sim, std::size_t k);

/// found cluster -> planted cluster maximizing agreement (unmatched: SIZE_MAX).
std::vector<std::size_t> best_match(const std::vector<std::size_t>& found, std::size_t found_k,
                                    const std::vector<std::size_t>& planted, std::size_t planted_k);

/// Fraction of items whose found cluster maps onto their planted cluster
/// under the best one-to-one relabeling.
double cluster_recovery_score(const std::vector<std::size_t>& found, std::size_t found_k,
                              const std::vector<std::size_t>& planted, std::size_t planted_k);
double cluster_recovery_score(const Clustering& found, const PlantedTruth& planted);

}  // namespace prefdiag::oracle
