#include "prefdiag/clustering.hpp"

#include "prefdiag/errors.hpp"
#include "prefdiag/random.hpp"

#include <algorithm>
#include <numeric>

namespace prefdiag {

std::vector<ItemId> Clustering::members(std::size_t cluster) const {
    std::vector<ItemId> out;
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        if (assignment[j] == cluster) out.push_back(ItemId{static_cast<std::uint32_t>(j)});
    }
    return out;
}

double within_cluster_resemblance(const SimilarityMatrix& sim, std::span<const ItemId> members, ItemId item) {
    bool found = false;
    double total = 0.0;
    for (auto other : members) {
        if (other == item) {
            found = true;
            continue;
        }
        total += sim(other, item);
    }
    if (!found) {
        throw InvalidArgument("item " + std::to_string(item.index) + " is not a member of the cluster");
    }
    return total;
}

ItemId compute_medoid(const SimilarityMatrix& sim, std::span<const ItemId> members) {
    if (members.empty()) {
        throw EmptyCluster("cannot take the medoid of an empty cluster");
    }
    ItemId best = members.front();
    double best_score = -1.0;
    for (auto candidate : members) {
        const double score = within_cluster_resemblance(sim, members, candidate);
        if (score > best_score || (score == best_score && candidate < best)) {
            best = candidate;
            best_score = score;
        }
    }
    return best;
}

std::vector<std::size_t> assign_to_medoids(const SimilarityMatrix& sim, std::span<const ItemId> medoids) {
    const std::size_t n = sim.size();
    std::vector<std::size_t> owner(n, medoids.size());
    for (std::size_t c = 0; c < medoids.size(); ++c) {
        if (medoids[c].index >= n) {
            throw IndexError("medoid " + std::to_string(medoids[c].index) + " outside the catalog");
        }
        if (owner[medoids[c].index] != medoids.size()) {
            throw InvalidArgument("item " + std::to_string(medoids[c].index) + " is the medoid of two clusters");
        }
        owner[medoids[c].index] = c;
    }
    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (owner[j] != medoids.size()) {
            assignment[j] = owner[j];
            continue;
        }
        std::size_t best = 0;
        double best_sim = -1.0;
        for (std::size_t c = 0; c < medoids.size(); ++c) {
            const double s = sim(medoids[c].index, j);
            if (s > best_sim) {
                best = c;
                best_sim = s;
            }
        }
        assignment[j] = best;
    }
    return assignment;
}

namespace {

std::vector<std::vector<ItemId>> group(std::span<const std::size_t> assignment, std::size_t k) {
    std::vector<std::vector<ItemId>> clusters(k);
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        clusters[assignment[j]].push_back(ItemId{static_cast<std::uint32_t>(j)});
    }
    return clusters;
}

double objective_of(const SimilarityMatrix& sim, const std::vector<std::vector<ItemId>>& clusters,
                    std::span<const ItemId> medoids) {
    double total = 0.0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        total += within_cluster_resemblance(sim, clusters[c], medoids[c]);
    }
    return total;
}

// Surjective random assignment: a random permutation seeds one item into
// each cluster, the rest are placed uniformly.
std::vector<std::size_t> random_assignment(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
        std::swap(order[i - 1], order[uniform_index(rng, i)]);
    }
    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        assignment[order[r]] = r < k ? r : static_cast<std::size_t>(uniform_index(rng, k));
    }
    return assignment;
}

struct RestartResult {
    Clustering clustering;
    std::vector<double> trace;
};

RestartResult run_restart(const SimilarityMatrix& sim, const ClusteringParams& params, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t k = params.k;
    RestartResult result;
    auto assignment = random_assignment(sim.size(), k, rng);
    auto clusters = group(assignment, k);
    std::vector<ItemId> medoids(k);

    for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
        std::vector<ItemId> next(k);
        for (std::size_t c = 0; c < k; ++c) {
            next[c] = compute_medoid(sim, clusters[c]);
        }
        result.trace.push_back(objective_of(sim, clusters, next));
        if (iter > 0 && next == medoids) {
            break;
        }
        medoids = std::move(next);
        // Medoids stay in their own clusters, so no cluster can empty out here.
        assignment = assign_to_medoids(sim, medoids);
        clusters = group(assignment, k);
        result.trace.push_back(objective_of(sim, clusters, medoids));
    }
    result.clustering.k = k;
    result.clustering.assignment = std::move(assignment);
    result.clustering.medoids = std::move(medoids);
    result.clustering.objective = objective_of(sim, clusters, result.clustering.medoids);
    return result;
}

}  // namespace

double clustering_objective(const SimilarityMatrix& sim, std::span<const std::size_t> assignment,
                            std::span<const ItemId> medoids) {
    if (assignment.size() != sim.size()) {
        throw InvalidArgument("assignment does not cover the catalog");
    }
    for (auto c : assignment) {
        if (c >= medoids.size()) throw InvalidArgument("assignment refers to a missing cluster");
    }
    return objective_of(sim, group(assignment, medoids.size()), medoids);
}

Clustering k_medoids(const SimilarityMatrix& sim, const ClusteringParams& params, KMedoidsTrace* trace) {
    if (params.k == 0 || params.k > sim.size()) {
        throw InvalidArgument("k = " + std::to_string(params.k) + " must lie in [1, " + std::to_string(sim.size()) +
                              "]");
    }
    if (params.restarts == 0 || params.max_iterations == 0) {
        throw InvalidArgument("restarts and max_iterations must be at least 1");
    }
    std::vector<RestartResult> results(params.restarts);
    const auto restarts = static_cast<std::int64_t>(params.restarts);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < restarts; ++r) {
        results[static_cast<std::size_t>(r)] = run_restart(sim, params, params.seed ^ static_cast<std::uint64_t>(r));
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r) {
        if (results[r].clustering.objective > results[best].clustering.objective) best = r;
    }
    if (trace) {
        trace->objectives.clear();
        for (auto& r : results) trace->objectives.push_back(std::move(r.trace));
    }
    return std::move(results[best].clustering);
}

}  // namespace prefdiag
