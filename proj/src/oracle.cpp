#include "prefdiag/oracle.hpp"

#include "prefdiag/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace prefdiag::oracle {

namespace {

bool selected(const ResponseDatum& r, ItemId item) {
    for (auto s : r.selected) {
        if (s == item) return true;
    }
    return false;
}

void check_item(const Dataset& dataset, ItemId item) {
    if (item.index >= dataset.catalog_size()) throw IndexError("item out of range");
}

}  // namespace

CountRatio oracle_jaccard(const Dataset& dataset, ItemId i, ItemId j) {
    check_item(dataset, i);
    check_item(dataset, j);
    CountRatio r;
    for (const auto& d : dataset.responses()) {
        const bool a = selected(d, i);
        const bool b = selected(d, j);
        if (a && b) ++r.num;
        if (a || b) ++r.den;
    }
    return r;
}

CountRatio general_preference_strength(const Dataset& dataset, SubjectId subject, ItemId item) {
    check_item(dataset, item);
    CountRatio r;
    for (const auto& d : dataset.responses()) {
        const bool has_item = selected(d, item);
        if (has_item && d.subject == subject) ++r.num;
        if (has_item) ++r.den;
    }
    return r;
}

BestClustering oracle_best_clustering(const SimilarityMatrix& sim, std::size_t k) {
    const std::size_t n = sim.size();
    if (n > kMaxOracleItems) {
        throw InfeasibleOracle("exhaustive search limited to " + std::to_string(kMaxOracleItems) + " items");
    }
    if (k == 0 || k > n) throw InvalidArgument("k must lie in [1, n]");

    BestClustering best;
    best.objective = -1.0;
    // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i)).
    std::vector<std::size_t> label(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    auto evaluate = [&] {
        double total = 0.0;
        for (std::size_t b = 0; b < k; ++b) {
            double block_best = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (label[j] != b) continue;
                double m = 0.0;
                for (std::size_t l = 0; l < n; ++l) {
                    if (l != j && label[l] == b) m += sim(l, j);
                }
                block_best = std::max(block_best, m);
            }
            total += block_best;
        }
        if (total > best.objective) {
            best.objective = total;
            best.partition = label;
        }
    };
    // Iterative enumeration over all strings, keeping those with exactly k blocks.
    while (true) {
        if (prefix_max[n - 1] + 1 == k) evaluate();
        std::size_t i = n - 1;
        while (i > 0 && (label[i] > prefix_max[i - 1] || label[i] + 1 >= k)) --i;
        if (i == 0) break;
        ++label[i];
        prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
        for (std::size_t t = i + 1; t < n; ++t) {
            label[t] = 0;
            prefix_max[t] = prefix_max[t - 1];
        }
    }
    return best;
}

std::vector<std::size_t> best_match(const std::vector<std::size_t>& found, std::size_t found_k,
                                    const std::vector<std::size_t>& planted, std::size_t planted_k) {
    if (found.size() != planted.size()) {
        throw InvalidArgument("found and planted clusterings cover different item sets");
    }
    if (planted_k > 20) throw InvalidArgument("too many planted clusters for exact matching");
    std::vector<std::vector<std::size_t>> overlap(found_k, std::vector<std::size_t>(planted_k, 0));
    for (std::size_t j = 0; j < found.size(); ++j) {
        if (found[j] >= found_k || planted[j] >= planted_k) throw InvalidArgument("cluster index out of range");
        ++overlap[found[j]][planted[j]];
    }
    // dp over found clusters in order; mask = planted clusters already used.
    const std::size_t masks = std::size_t{1} << planted_k;
    constexpr std::int64_t unset = -1;
    std::vector<std::vector<std::int64_t>> dp(found_k + 1, std::vector<std::int64_t>(masks, unset));
    std::vector<std::vector<std::int64_t>> choice(found_k + 1, std::vector<std::int64_t>(masks, -1));
    dp[0][0] = 0;
    for (std::size_t f = 0; f < found_k; ++f) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
            if (dp[f][mask] == unset) continue;
            // leave f unmatched
            if (dp[f][mask] > dp[f + 1][mask]) {
                dp[f + 1][mask] = dp[f][mask];
                choice[f + 1][mask] = -1;
            }
            for (std::size_t p = 0; p < planted_k; ++p) {
                if (mask & (std::size_t{1} << p)) continue;
                const auto next = mask | (std::size_t{1} << p);
                const auto value = dp[f][mask] + static_cast<std::int64_t>(overlap[f][p]);
                if (value > dp[f + 1][next]) {
                    dp[f + 1][next] = value;
                    choice[f + 1][next] = static_cast<std::int64_t>(p);
                }
            }
        }
    }
    std::size_t mask = static_cast<std::size_t>(std::max_element(dp[found_k].begin(), dp[found_k].end()) - dp[found_k].begin());
    std::vector<std::size_t> match(found_k, std::numeric_limits<std::size_t>::max());
    for (std::size_t f = found_k; f > 0; --f) {
        const auto p = choice[f][mask];
        if (p >= 0) {
            match[f - 1] = static_cast<std::size_t>(p);
            mask &= ~(std::size_t{1} << p);
        }
    }
    return match;
}

double cluster_recovery_score(const std::vector<std::size_t>& found, std::size_t found_k,
                              const std::vector<std::size_t>& planted, std::size_t planted_k) {
    const auto match = best_match(found, found_k, planted, planted_k);
    if (found.empty()) return 1.0;
    std::size_t agree = 0;
    for (std::size_t j = 0; j < found.size(); ++j) {
        agree += match[found[j]] == planted[j] ? 1 : 0;
    }
    return static_cast<double>(agree) / static_cast<double>(found.size());
}

double cluster_recovery_score(const Clustering& found, const PlantedTruth& planted) {
    return cluster_recovery_score(found.assignment, found.k, planted.item_cluster, planted.k);
}

}  // namespace prefdiag::oracle
