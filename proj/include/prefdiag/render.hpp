#pragma once

#include "prefdiag/diagram.hpp"
#include "prefdiag/layout.hpp"

#include <string>

namespace prefdiag {

struct StyleOptions {
    double width = 1000.0;
    double height = 1000.0;
    double node_radius = 8.0;
    bool cluster_hulls = true;
    bool item_labels = true;
};

/// SVG 1.1 document. Items are circles (or <image> thumbnails), subjects
/// squares, switches diamonds; resemblance edges solid, primary-preference
/// edges bold, switch links dashed. Throws ConsistencyError if the layout
/// does not cover every node.
std::string render_svg(const PreferenceDiagram& diagram, const LayoutResult& layout, const StyleOptions& style = {});

/// Undirected Graphviz DOT; kinds travel as node/edge attributes.
std::string render_dot(const PreferenceDiagram& diagram);

}  // namespace prefdiag
