#include "prefdiag/render.hpp"

#include <cstdio>
#include <sstream>

namespace prefdiag {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + '"';
}

const char* shape(NodeKind kind) {
    switch (kind) {
        case NodeKind::Item: return "circle";
        case NodeKind::Subject: return "box";
        case NodeKind::Switch: return "diamond";
    }
    return "circle";
}

const char* style(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Resemblance: return "solid";
        case EdgeKind::PrimaryPreference: return "bold";
        case EdgeKind::SwitchLink: return "dashed";
    }
    return "solid";
}

}  // namespace

std::string render_dot(const PreferenceDiagram& diagram) {
    std::ostringstream dot;
    dot << "graph {\n";
    for (const auto& node : diagram.nodes) {
        dot << "  " << quoted(node.id) << " [kind=" << to_string(node.kind) << ", shape=" << shape(node.kind)
            << ", label=" << quoted(node.label);
        if (node.cluster) dot << ", cluster=" << *node.cluster;
        if (node.image_ref) dot << ", image=" << quoted(*node.image_ref);
        dot << "];\n";
    }
    char weight[32];
    for (const auto& e : diagram.edges) {
        std::snprintf(weight, sizeof(weight), "%.6g", e.weight);
        dot << "  " << quoted(diagram.nodes[e.a].id) << " -- " << quoted(diagram.nodes[e.b].id)
            << " [kind=" << to_string(e.kind) << ", style=" << style(e.kind) << ", strength=" << weight << "];\n";
    }
    dot << "}\n";
    return dot.str();
}

}  // namespace prefdiag
