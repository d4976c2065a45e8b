#pragma once

#include "prefdiag/clustering.hpp"
#include "prefdiag/dataset.hpp"
#include "prefdiag/diagram.hpp"
#include "prefdiag/layout.hpp"
#include "prefdiag/profile.hpp"
#include "prefdiag/synth.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>

namespace prefdiag {

using Json = nlohmann::ordered_json;

/// `{k, medoids: [label...], assignment: {label: cluster}, objective}`
Json clustering_to_json(const Dataset& dataset, const Clustering& clustering);

/// One object per subject: `{subject, primary_cluster, primary_gateways,
/// secondary_cluster, secondary_gateways, mode}`.
Json profiles_to_json(const Dataset& dataset, const ProfileSet& profiles);

/// Canonical graph dump `{granularity, include_switches, nodes: [{id, kind,
/// label, cluster}], edges: [{a, b, kind, weight}]}`. With a layout, nodes
/// also carry `x`, `y`.
Json diagram_to_json(const PreferenceDiagram& diagram, const LayoutResult* layout = nullptr);

/// Inverse of diagram_to_json (positions are ignored). Throws ParseError.
PreferenceDiagram diagram_from_json(const Json& doc);

Json truth_to_json(const Dataset& dataset, const PlantedTruth& truth);

/// `{item_label: path}`. Throws ParseError on anything else.
std::map<std::string, std::string> parse_image_manifest(std::string_view text);

Json stats_to_json(const DiagramStats& stats);

}  // namespace prefdiag
