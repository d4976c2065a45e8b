#include "prefdiag/render.hpp"

#include "prefdiag/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>

namespace prefdiag {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c; break;
        }
    }
    return out;
}

const char* cluster_color(const DiagramNode& node) {
    return node.cluster ? kPalette[*node.cluster % kPalette.size()] : "#444444";
}

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain, counter-clockwise, no collinear points.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3) return pts;
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

std::string render_svg(const PreferenceDiagram& diagram, const LayoutResult& layout, const StyleOptions& style) {
    if (layout.positions.size() != diagram.nodes.size()) {
        throw ConsistencyError("layout has " + std::to_string(layout.positions.size()) + " positions for " +
                               std::to_string(diagram.nodes.size()) + " nodes");
    }
    const auto& pos = layout.positions;
    const double r = style.node_radius;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" version=\"1.1\""
        << " width=\"" << num(style.width) << "\" height=\"" << num(style.height) << "\" viewBox=\"0 0 "
        << num(style.width) << ' ' << num(style.height) << "\">\n";
    if (diagram.nodes.empty()) {
        svg << "</svg>\n";
        return svg.str();
    }

    if (style.cluster_hulls) {
        std::map<std::size_t, std::vector<Vec2>> members;
        for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
            if (diagram.nodes[i].cluster) members[*diagram.nodes[i].cluster].push_back(pos[i]);
        }
        svg << "<g class=\"hulls\" stroke-width=\"1\" fill-opacity=\"0.08\" stroke-opacity=\"0.4\">\n";
        for (const auto& [cluster, pts] : members) {
            const auto hull = convex_hull(pts);
            if (hull.size() < 3) continue;
            svg << "<path class=\"hull\" data-cluster=\"" << cluster << "\" fill=\"" << kPalette[cluster % kPalette.size()]
                << "\" stroke=\"" << kPalette[cluster % kPalette.size()] << "\" d=\"";
            for (std::size_t k = 0; k < hull.size(); ++k) {
                svg << (k ? " L " : "M ") << num(hull[k].x) << ' ' << num(hull[k].y);
            }
            svg << " Z\"/>\n";
        }
        svg << "</g>\n";
    }

    svg << "<g class=\"edges\">\n";
    for (const auto& e : diagram.edges) {
        svg << "<line class=\"" << to_string(e.kind) << "\" x1=\"" << num(pos[e.a].x) << "\" y1=\"" << num(pos[e.a].y)
            << "\" x2=\"" << num(pos[e.b].x) << "\" y2=\"" << num(pos[e.b].y) << '"';
        switch (e.kind) {
            case EdgeKind::Resemblance: svg << " stroke=\"#999999\" stroke-width=\"1\""; break;
            case EdgeKind::PrimaryPreference: svg << " stroke=\"#222222\" stroke-width=\"3\""; break;
            case EdgeKind::SwitchLink: svg << " stroke=\"#cc3333\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\""; break;
        }
        svg << "/>\n";
    }
    svg << "</g>\n";

    svg << "<g class=\"nodes\" stroke=\"#222222\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        const auto& node = diagram.nodes[i];
        const auto& p = pos[i];
        const std::string id = xml_escape(node.id);
        switch (node.kind) {
            case NodeKind::Item:
                if (node.image_ref) {
                    svg << "<image class=\"item\" id=\"" << id << "\" x=\"" << num(p.x - 2 * r) << "\" y=\""
                        << num(p.y - 2 * r) << "\" width=\"" << num(4 * r) << "\" height=\"" << num(4 * r)
                        << "\" xlink:href=\"" << xml_escape(*node.image_ref) << "\"/>\n";
                } else {
                    svg << "<circle class=\"item\" id=\"" << id << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
                        << "\" r=\"" << num(r) << "\" fill=\"" << cluster_color(node) << "\"/>\n";
                }
                break;
            case NodeKind::Subject:
                svg << "<rect class=\"subject\" id=\"" << id << "\" x=\"" << num(p.x - r) << "\" y=\"" << num(p.y - r)
                    << "\" width=\"" << num(2 * r) << "\" height=\"" << num(2 * r) << "\" fill=\"#ffffff\"/>\n";
                break;
            case NodeKind::Switch:
                svg << "<polygon class=\"switch\" id=\"" << id << "\" points=\"" << num(p.x) << ',' << num(p.y - r)
                    << ' ' << num(p.x + r) << ',' << num(p.y) << ' ' << num(p.x) << ',' << num(p.y + r) << ' '
                    << num(p.x - r) << ',' << num(p.y) << "\" fill=\"#ffcc00\"/>\n";
                break;
        }
    }
    svg << "</g>\n";

    svg << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
    for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
        const auto& node = diagram.nodes[i];
        // Switches stay unlabeled; their meaning comes from the chain they sit on.
        if (node.kind == NodeKind::Switch || (node.kind == NodeKind::Item && !style.item_labels)) continue;
        svg << "<text x=\"" << num(pos[i].x) << "\" y=\"" << num(pos[i].y + 2.2 * r) << "\">" << xml_escape(node.label)
            << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace prefdiag
