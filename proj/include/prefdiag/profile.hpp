#pragma once

#include "prefdiag/clustering.hpp"
#include "prefdiag/dataset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefdiag {

/// How the secondary cluster is chosen: the one preferred most weakly, or
/// the runner-up after the primary.
enum class SecondaryMode { weakest, runner_up };

std::string_view to_string(SecondaryMode mode);
std::optional<SecondaryMode> parse_secondary_mode(std::string_view text);

/// A subject's characteristic objects. `secondary_cluster` is empty only for
/// primary-only profiles (single-cluster runs).
struct PreferenceProfile {
    SubjectId subject;
    std::size_t primary_cluster = 0;
    std::vector<ItemId> primary_gateways;
    std::optional<std::size_t> secondary_cluster;
    std::vector<ItemId> secondary_gateways;
    std::string switch_id;

    bool operator==(const PreferenceProfile&) const = default;
};

struct ProfileSet {
    std::vector<PreferenceProfile> profiles;  // ordered by subject
    std::vector<SubjectId> skipped;           // subjects with empty selections
    SecondaryMode mode = SecondaryMode::weakest;
};

/// 1/F(item) if the subject selected the item, else 0.
double preference_strength(const Dataset& dataset, SubjectId subject, ItemId item);

/// Per-cluster max of the subject's preference strength over members.
std::vector<double> cluster_scores(const Dataset& dataset, const Clustering& clustering, SubjectId subject);

/// Cluster holding the subject's most strongly preferred item.
std::size_t primary_cluster(const Dataset& dataset, const Clustering& clustering, SubjectId subject);

/// Every member of `cluster` attaining the subject's maximal strength there.
/// When that maximum is 0 the cluster's medoid stands in alone.
std::vector<ItemId> gateway_items(const Dataset& dataset, const Clustering& clustering, SubjectId subject,
                                  std::size_t cluster);

std::size_t secondary_cluster(const Dataset& dataset, const Clustering& clustering, SubjectId subject,
                              SecondaryMode mode);

/// Identifier of the switch node belonging to a subject.
std::string switch_id_for(SubjectId subject);

/// Full profiles for every subject with a nonempty selection. Needs k >= 2.
ProfileSet build_profiles(const Dataset& dataset, const Clustering& clustering, SecondaryMode mode);

/// Primary cluster and gateways only; works for any k >= 1.
ProfileSet build_primary_profiles(const Dataset& dataset, const Clustering& clustering);

}  // namespace prefdiag
