#pragma once

#include "prefdiag/clustering.hpp"
#include "prefdiag/dataset.hpp"
#include "prefdiag/profile.hpp"
#include "prefdiag/similarity.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefdiag {

enum class NodeKind { Item, Subject, Switch };
enum class EdgeKind { Resemblance, PrimaryPreference, SwitchLink };

std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view text);
std::optional<EdgeKind> parse_edge_kind(std::string_view text);

struct DiagramNode {
    std::string id;
    NodeKind kind = NodeKind::Item;
    std::string label;
    std::optional<std::size_t> cluster;  // items only
    std::optional<std::string> image_ref;  // items only
    std::optional<std::uint32_t> owner;  // switches: owning subject

    bool operator==(const DiagramNode&) const = default;
};

/// Undirected edge between two positions in PreferenceDiagram::nodes.
struct DiagramEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    EdgeKind kind = EdgeKind::Resemblance;
    double weight = 0.0;

    bool operator==(const DiagramEdge&) const = default;
};

struct PreferenceDiagram {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;
    std::size_t granularity = 0;
    bool include_switches = false;

    /// Position of the node with `id`, or nullopt.
    std::optional<std::size_t> find(std::string_view id) const;
    bool operator==(const PreferenceDiagram&) const = default;
};

/// Weight of the two switch-chain edges, relative to the subject's strongest
/// primary gateway.
inline constexpr double kSwitchLinkFactor = 0.5;

/// Items grouped by cluster with resemblance links, subjects tied to their
/// primary gateways, and (optionally) one switch per subject chained to the
/// secondary gateways. Throws ConsistencyError when profiles and clustering
/// disagree.
PreferenceDiagram build_diagram(const Dataset& dataset, const Clustering& clustering, const ProfileSet& profiles,
                                const SimilarityMatrix& sim, bool include_switches);

struct DiagramStats {
    std::size_t items = 0;
    std::size_t subjects = 0;
    std::size_t switches = 0;
    std::size_t resemblance_edges = 0;
    std::size_t primary_edges = 0;
    std::size_t switch_edges = 0;
    std::map<std::size_t, std::size_t> cluster_sizes;  // cluster -> item count
    std::vector<std::string> isolated;                 // node ids without edges

    bool operator==(const DiagramStats&) const = default;
};

DiagramStats diagram_stats(const PreferenceDiagram& diagram);

/// Copy without zero-degree nodes (edge endpoints are remapped).
PreferenceDiagram without_isolated(const PreferenceDiagram& diagram);

/// Attaches image paths (keyed by item label) to item nodes.
void attach_images(PreferenceDiagram& diagram, const std::map<std::string, std::string>& images);

}  // namespace prefdiag
