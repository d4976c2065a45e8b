#include "prefdiag/profile.hpp"

#include "prefdiag/errors.hpp"
#include "prefdiag/similarity.hpp"

#include <algorithm>

namespace prefdiag {

std::string_view to_string(SecondaryMode mode) {
    return mode == SecondaryMode::weakest ? "weakest" : "runner-up";
}

std::optional<SecondaryMode> parse_secondary_mode(std::string_view text) {
    if (text == "weakest") return SecondaryMode::weakest;
    if (text == "runner-up" || text == "runner_up") return SecondaryMode::runner_up;
    return std::nullopt;
}

double preference_strength(const Dataset& dataset, SubjectId subject, ItemId item) {
    const auto& response = dataset.response(subject);
    const auto frequency = occurrence_frequency(dataset, item);
    if (!response.contains(item) || frequency == 0) {
        return 0.0;
    }
    return 1.0 / static_cast<double>(frequency);
}

namespace {

void check_cluster(const Clustering& clustering, std::size_t cluster) {
    if (cluster >= clustering.k) {
        throw IndexError("cluster " + std::to_string(cluster) + " out of range for k = " +
                         std::to_string(clustering.k));
    }
}

void check_nonempty(const Dataset& dataset, SubjectId subject) {
    if (dataset.response(subject).selected.empty()) {
        throw DegenerateSubject("subject '" + dataset.subject_label(subject) + "' selected nothing");
    }
}

// Strengths for one subject over the whole catalog, from per-item frequencies.
std::vector<double> strengths(const Dataset& dataset, const std::vector<std::size_t>& frequency, SubjectId subject) {
    std::vector<double> w(dataset.catalog_size(), 0.0);
    for (auto item : dataset.response(subject).selected) {
        w[item.index] = 1.0 / static_cast<double>(frequency[item.index]);
    }
    return w;
}

std::vector<std::size_t> frequencies(const Dataset& dataset) {
    std::vector<std::size_t> f(dataset.catalog_size(), 0);
    for (const auto& r : dataset.responses()) {
        for (auto item : r.selected) ++f[item.index];
    }
    return f;
}

std::vector<double> scores_from(const Clustering& clustering, const std::vector<double>& w) {
    std::vector<double> score(clustering.k, 0.0);
    for (std::size_t j = 0; j < w.size(); ++j) {
        score[clustering.assignment[j]] = std::max(score[clustering.assignment[j]], w[j]);
    }
    return score;
}

std::size_t argmax_score(const std::vector<double>& score) {
    // max_element keeps the first maximum, i.e. the lowest index.
    return static_cast<std::size_t>(std::max_element(score.begin(), score.end()) - score.begin());
}

std::size_t secondary_from(const std::vector<double>& score, std::size_t primary, SecondaryMode mode) {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < score.size(); ++c) {
        if (c == primary) continue;
        if (!best) {
            best = c;
            continue;
        }
        const bool better = mode == SecondaryMode::weakest ? score[c] < score[*best] : score[c] > score[*best];
        if (better) best = c;
    }
    return *best;
}

std::vector<ItemId> gateways_from(const Clustering& clustering, const std::vector<double>& w, std::size_t cluster) {
    double top = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (clustering.assignment[j] == cluster) top = std::max(top, w[j]);
    }
    if (top == 0.0) {
        return {clustering.medoids[cluster]};
    }
    std::vector<ItemId> out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (clustering.assignment[j] == cluster && w[j] == top) out.push_back(ItemId{static_cast<std::uint32_t>(j)});
    }
    return out;
}

void check_clustering(const Dataset& dataset, const Clustering& clustering) {
    if (clustering.assignment.size() != dataset.catalog_size() || clustering.medoids.size() != clustering.k) {
        throw ConsistencyError("clustering does not match the dataset's catalog");
    }
}

ProfileSet build(const Dataset& dataset, const Clustering& clustering, std::optional<SecondaryMode> mode) {
    check_clustering(dataset, clustering);
    const auto f = frequencies(dataset);
    ProfileSet set;
    set.mode = mode.value_or(SecondaryMode::weakest);
    for (const auto& r : dataset.responses()) {
        if (r.selected.empty()) {
            set.skipped.push_back(r.subject);
            continue;
        }
        const auto w = strengths(dataset, f, r.subject);
        const auto score = scores_from(clustering, w);
        PreferenceProfile p;
        p.subject = r.subject;
        p.primary_cluster = argmax_score(score);
        p.primary_gateways = gateways_from(clustering, w, p.primary_cluster);
        if (mode) {
            p.secondary_cluster = secondary_from(score, p.primary_cluster, *mode);
            p.secondary_gateways = gateways_from(clustering, w, *p.secondary_cluster);
            p.switch_id = switch_id_for(r.subject);
        }
        set.profiles.push_back(std::move(p));
    }
    return set;
}

}  // namespace

std::vector<double> cluster_scores(const Dataset& dataset, const Clustering& clustering, SubjectId subject) {
    check_clustering(dataset, clustering);
    return scores_from(clustering, strengths(dataset, frequencies(dataset), subject));
}

std::size_t primary_cluster(const Dataset& dataset, const Clustering& clustering, SubjectId subject) {
    check_nonempty(dataset, subject);
    return argmax_score(cluster_scores(dataset, clustering, subject));
}

std::vector<ItemId> gateway_items(const Dataset& dataset, const Clustering& clustering, SubjectId subject,
                                  std::size_t cluster) {
    check_clustering(dataset, clustering);
    check_cluster(clustering, cluster);
    if (std::find(clustering.assignment.begin(), clustering.assignment.end(), cluster) ==
        clustering.assignment.end()) {
        throw EmptyCluster("cluster " + std::to_string(cluster) + " has no members");
    }
    return gateways_from(clustering, strengths(dataset, frequencies(dataset), subject), cluster);
}

std::size_t secondary_cluster(const Dataset& dataset, const Clustering& clustering, SubjectId subject,
                              SecondaryMode mode) {
    if (clustering.k < 2) {
        throw NoSecondaryCluster("a secondary cluster needs at least two clusters");
    }
    check_nonempty(dataset, subject);
    const auto score = cluster_scores(dataset, clustering, subject);
    return secondary_from(score, argmax_score(score), mode);
}

std::string switch_id_for(SubjectId subject) {
    return "switch" + std::to_string(subject.index);
}

ProfileSet build_profiles(const Dataset& dataset, const Clustering& clustering, SecondaryMode mode) {
    if (clustering.k < 2) {
        throw NoSecondaryCluster("a secondary cluster needs at least two clusters");
    }
    return build(dataset, clustering, mode);
}

ProfileSet build_primary_profiles(const Dataset& dataset, const Clustering& clustering) {
    return build(dataset, clustering, std::nullopt);
}

}  // namespace prefdiag
