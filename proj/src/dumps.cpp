#include "prefdiag/dumps.hpp"

#include "prefdiag/errors.hpp"

namespace prefdiag {

Json clustering_to_json(const Dataset& dataset, const Clustering& clustering) {
    Json doc;
    doc["k"] = clustering.k;
    auto medoids = Json::array();
    for (auto m : clustering.medoids) medoids.push_back(dataset.item_label(m));
    doc["medoids"] = std::move(medoids);
    Json assignment = Json::object();
    for (std::size_t j = 0; j < clustering.assignment.size(); ++j) {
        assignment[dataset.item_label(ItemId{static_cast<std::uint32_t>(j)})] = clustering.assignment[j];
    }
    doc["assignment"] = std::move(assignment);
    doc["objective"] = clustering.objective;
    return doc;
}

Json profiles_to_json(const Dataset& dataset, const ProfileSet& profiles) {
    auto labels = [&](const std::vector<ItemId>& items) {
        auto out = Json::array();
        for (auto i : items) out.push_back(dataset.item_label(i));
        return out;
    };
    auto out = Json::array();
    for (const auto& p : profiles.profiles) {
        Json entry;
        entry["subject"] = dataset.subject_label(p.subject);
        entry["primary_cluster"] = p.primary_cluster;
        entry["primary_gateways"] = labels(p.primary_gateways);
        if (p.secondary_cluster) {
            entry["secondary_cluster"] = *p.secondary_cluster;
            entry["secondary_gateways"] = labels(p.secondary_gateways);
            entry["mode"] = std::string(to_string(profiles.mode));
        } else {
            entry["secondary_cluster"] = nullptr;
            entry["secondary_gateways"] = Json::array();
            entry["mode"] = nullptr;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

Json diagram_to_json(const PreferenceDiagram& diagram, const LayoutResult* layout) {
    if (layout && layout->positions.size() != diagram.nodes.size()) {
        throw ConsistencyError("layout does not cover the diagram");
    }
    Json doc;
    doc["granularity"] = diagram.granularity;
    doc["include_switches"] = diagram.include_switches;
    auto nodes = Json::array();
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        const auto& node = diagram.nodes[i];
        Json n;
        n["id"] = node.id;
        n["kind"] = std::string(to_string(node.kind));
        n["label"] = node.label;
        n["cluster"] = node.cluster ? Json(*node.cluster) : Json(nullptr);
        if (node.image_ref) n["image"] = *node.image_ref;
        if (node.owner) n["owner"] = *node.owner;
        if (layout) {
            n["x"] = layout->positions[i].x;
            n["y"] = layout->positions[i].y;
        }
        nodes.push_back(std::move(n));
    }
    doc["nodes"] = std::move(nodes);
    auto edges = Json::array();
    for (const auto& e : diagram.edges) {
        edges.push_back({{"a", diagram.nodes[e.a].id},
                         {"b", diagram.nodes[e.b].id},
                         {"kind", std::string(to_string(e.kind))},
                         {"weight", e.weight}});
    }
    doc["edges"] = std::move(edges);
    return doc;
}

PreferenceDiagram diagram_from_json(const Json& doc) {
    try {
        PreferenceDiagram diagram;
        diagram.granularity = doc.at("granularity").get<std::size_t>();
        diagram.include_switches = doc.value("include_switches", false);
        for (const auto& n : doc.at("nodes")) {
            DiagramNode node;
            node.id = n.at("id").get<std::string>();
            const auto kind = parse_node_kind(n.at("kind").get<std::string>());
            if (!kind) throw ParseError("unknown node kind", 0, 0);
            node.kind = *kind;
            node.label = n.value("label", std::string{});
            if (n.contains("cluster") && !n["cluster"].is_null()) node.cluster = n["cluster"].get<std::size_t>();
            if (n.contains("image")) node.image_ref = n["image"].get<std::string>();
            if (n.contains("owner")) node.owner = n["owner"].get<std::uint32_t>();
            if (diagram.find(node.id)) throw ParseError("duplicate node id '" + node.id + "'", 0, 0);
            diagram.nodes.push_back(std::move(node));
        }
        for (const auto& e : doc.at("edges")) {
            const auto a = diagram.find(e.at("a").get<std::string>());
            const auto b = diagram.find(e.at("b").get<std::string>());
            const auto kind = parse_edge_kind(e.at("kind").get<std::string>());
            if (!a || !b || !kind) throw ParseError("edge refers to unknown node or kind", 0, 0);
            diagram.edges.push_back({*a, *b, *kind, e.at("weight").get<double>()});
        }
        return diagram;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

Json truth_to_json(const Dataset& dataset, const PlantedTruth& truth) {
    Json doc;
    doc["k"] = truth.k;
    Json items = Json::object();
    for (std::size_t j = 0; j < truth.item_cluster.size(); ++j) {
        items[dataset.item_label(ItemId{static_cast<std::uint32_t>(j)})] = truth.item_cluster[j];
    }
    doc["item_cluster"] = std::move(items);
    auto subjects = Json::array();
    for (std::size_t i = 0; i < truth.home.size(); ++i) {
        subjects.push_back({{"subject", dataset.subject_label(SubjectId{static_cast<std::uint32_t>(i)})},
                            {"home", truth.home[i]},
                            {"away", truth.away[i] ? Json(*truth.away[i]) : Json(nullptr)}});
    }
    doc["subjects"] = std::move(subjects);
    return doc;
}

std::map<std::string, std::string> parse_image_manifest(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 0, e.byte);
    }
    if (!doc.is_object()) throw ParseError("image manifest must be an object", 0, 0);
    std::map<std::string, std::string> out;
    for (const auto& [label, path] : doc.items()) {
        if (!path.is_string()) throw ParseError("image path for '" + label + "' must be a string", 0, 0);
        out[label] = path.get<std::string>();
    }
    return out;
}

Json stats_to_json(const DiagramStats& stats) {
    Json doc;
    doc["items"] = stats.items;
    doc["subjects"] = stats.subjects;
    doc["switches"] = stats.switches;
    doc["resemblance_edges"] = stats.resemblance_edges;
    doc["primary_edges"] = stats.primary_edges;
    doc["switch_edges"] = stats.switch_edges;
    Json sizes = Json::object();
    for (const auto& [c, size] : stats.cluster_sizes) sizes[std::to_string(c)] = size;
    doc["cluster_sizes"] = std::move(sizes);
    doc["isolated"] = stats.isolated;
    return doc;
}

}  // namespace prefdiag
