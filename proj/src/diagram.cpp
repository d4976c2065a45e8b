#include "prefdiag/diagram.hpp"

#include "prefdiag/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace prefdiag {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Item: return "item";
        case NodeKind::Subject: return "subject";
        case NodeKind::Switch: return "switch";
    }
    return "item";
}

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Resemblance: return "resemblance";
        case EdgeKind::PrimaryPreference: return "primary";
        case EdgeKind::SwitchLink: return "switch";
    }
    return "resemblance";
}

std::optional<NodeKind> parse_node_kind(std::string_view text) {
    for (auto k : {NodeKind::Item, NodeKind::Subject, NodeKind::Switch}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

std::optional<EdgeKind> parse_edge_kind(std::string_view text) {
    for (auto k : {EdgeKind::Resemblance, EdgeKind::PrimaryPreference, EdgeKind::SwitchLink}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

std::optional<std::size_t> PreferenceDiagram::find(std::string_view id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id == id) return i;
    }
    return std::nullopt;
}

namespace {

std::string item_node_id(ItemId item) { return "item" + std::to_string(item.index); }
std::string subject_node_id(SubjectId s) { return "subject" + std::to_string(s.index); }

void check_gateways(const Clustering& clustering, const std::vector<ItemId>& gateways, std::size_t cluster,
                    const std::string& who) {
    if (gateways.empty()) {
        throw ConsistencyError(who + ": empty gateway set");
    }
    for (auto g : gateways) {
        if (g.index >= clustering.assignment.size() || clustering.assignment[g.index] != cluster) {
            throw ConsistencyError(who + ": gateway item " + std::to_string(g.index) + " is not in cluster " +
                                   std::to_string(cluster));
        }
    }
}

}  // namespace

PreferenceDiagram build_diagram(const Dataset& dataset, const Clustering& clustering, const ProfileSet& profiles,
                                const SimilarityMatrix& sim, bool include_switches) {
    const std::size_t n = dataset.catalog_size();
    if (clustering.assignment.size() != n || sim.size() != n || clustering.medoids.size() != clustering.k) {
        throw ConsistencyError("clustering / similarity sizes do not match the catalog");
    }
    PreferenceDiagram diagram;
    diagram.granularity = clustering.k;
    diagram.include_switches = include_switches;

    std::vector<double> frequency(n, 0.0);
    for (const auto& r : dataset.responses()) {
        for (auto item : r.selected) frequency[item.index] += 1.0;
    }

    for (std::uint32_t j = 0; j < n; ++j) {
        if (clustering.assignment[j] >= clustering.k) {
            throw ConsistencyError("item " + std::to_string(j) + " assigned to a missing cluster");
        }
        DiagramNode node;
        node.id = item_node_id(ItemId{j});
        node.kind = NodeKind::Item;
        node.label = dataset.item_label(ItemId{j});
        node.cluster = clustering.assignment[j];
        diagram.nodes.push_back(std::move(node));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (clustering.assignment[i] == clustering.assignment[j] && sim(i, j) > 0.0) {
                diagram.edges.push_back({i, j, EdgeKind::Resemblance, sim(i, j)});
            }
        }
    }

    std::set<std::uint32_t> seen;
    for (const auto& p : profiles.profiles) {
        if (p.subject.index >= dataset.num_subjects() || !seen.insert(p.subject.index).second) {
            throw ConsistencyError("profile for unknown or repeated subject " + std::to_string(p.subject.index));
        }
        const auto& who = dataset.subject_label(p.subject);
        if (p.primary_cluster >= clustering.k) {
            throw ConsistencyError(who + ": primary cluster out of range");
        }
        check_gateways(clustering, p.primary_gateways, p.primary_cluster, who);

        const std::size_t subject_node = diagram.nodes.size();
        diagram.nodes.push_back({subject_node_id(p.subject), NodeKind::Subject, who, std::nullopt, std::nullopt,
                                 std::nullopt});
        const auto& response = dataset.response(p.subject);
        double strongest = 0.0;
        for (auto g : p.primary_gateways) {
            if (!response.contains(g)) {
                throw ConsistencyError(who + ": primary gateway " + dataset.item_label(g) + " was not selected");
            }
            const double w = 1.0 / frequency[g.index];
            strongest = std::max(strongest, w);
            diagram.edges.push_back({subject_node, g.index, EdgeKind::PrimaryPreference, w});
        }

        if (!include_switches) continue;
        if (!p.secondary_cluster) {
            throw ConsistencyError(who + ": profile has no secondary cluster");
        }
        if (*p.secondary_cluster >= clustering.k || *p.secondary_cluster == p.primary_cluster) {
            throw ConsistencyError(who + ": secondary cluster invalid");
        }
        check_gateways(clustering, p.secondary_gateways, *p.secondary_cluster, who);
        const std::size_t switch_node = diagram.nodes.size();
        diagram.nodes.push_back({p.switch_id.empty() ? switch_id_for(p.subject) : p.switch_id, NodeKind::Switch,
                                 "", std::nullopt, std::nullopt, p.subject.index});
        const double w = kSwitchLinkFactor * strongest;
        diagram.edges.push_back({subject_node, switch_node, EdgeKind::SwitchLink, w});
        for (auto g : p.secondary_gateways) {
            diagram.edges.push_back({switch_node, g.index, EdgeKind::SwitchLink, w});
        }
    }
    return diagram;
}

DiagramStats diagram_stats(const PreferenceDiagram& diagram) {
    DiagramStats stats;
    std::vector<std::size_t> degree(diagram.nodes.size(), 0);
    for (const auto& e : diagram.edges) {
        ++degree[e.a];
        ++degree[e.b];
        switch (e.kind) {
            case EdgeKind::Resemblance: ++stats.resemblance_edges; break;
            case EdgeKind::PrimaryPreference: ++stats.primary_edges; break;
            case EdgeKind::SwitchLink: ++stats.switch_edges; break;
        }
    }
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        const auto& node = diagram.nodes[i];
        switch (node.kind) {
            case NodeKind::Item:
                ++stats.items;
                if (node.cluster) ++stats.cluster_sizes[*node.cluster];
                break;
            case NodeKind::Subject: ++stats.subjects; break;
            case NodeKind::Switch: ++stats.switches; break;
        }
        if (degree[i] == 0) stats.isolated.push_back(node.id);
    }
    return stats;
}

PreferenceDiagram without_isolated(const PreferenceDiagram& diagram) {
    std::vector<bool> keep(diagram.nodes.size(), false);
    for (const auto& e : diagram.edges) {
        keep[e.a] = keep[e.b] = true;
    }
    PreferenceDiagram out;
    out.granularity = diagram.granularity;
    out.include_switches = diagram.include_switches;
    std::vector<std::size_t> remap(diagram.nodes.size(), 0);
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        if (!keep[i]) continue;
        remap[i] = out.nodes.size();
        out.nodes.push_back(diagram.nodes[i]);
    }
    for (auto e : diagram.edges) {
        e.a = remap[e.a];
        e.b = remap[e.b];
        out.edges.push_back(e);
    }
    return out;
}

void attach_images(PreferenceDiagram& diagram, const std::map<std::string, std::string>& images) {
    for (auto& node : diagram.nodes) {
        if (node.kind != NodeKind::Item) continue;
        if (auto it = images.find(node.label); it != images.end()) node.image_ref = it->second;
    }
}

}  // namespace prefdiag
