#include "snakefrac/render.hpp"

#include <algorithm>
#include <numeric>

#include "snakefrac/errors.hpp"

namespace snakefrac {

namespace {

constexpr int kCellW = 4;  // columns per tile, borders shared
constexpr int kCellH = 2;  // rows per tile, borders shared

struct Canvas {
    int min_x, min_y, width, height;
    std::vector<std::string> rows;

    Canvas(int min_x_, int min_y_, int max_x, int max_y)
        : min_x(min_x_), min_y(min_y_), width((max_x - min_x_) * kCellW + 1), height((max_y - min_y_) * kCellH + 1) {
        rows.assign(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
    }

    // lattice point -> character cell; y grows upward, rows print top-down
    int col(int x) const { return (x - min_x) * kCellW; }
    int row(int y) const { return height - 1 - (y - min_y) * kCellH; }

    void put(int r, int c, char ch) { rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ch; }

    void draw_edge(const Edge& e, bool bold) {
        if (e.is_vertical()) {
            int c = col(e.a.x);
            int r = row(e.b.y);  // upper endpoint
            put(r, c, '+');
            put(r + 1, c, bold ? '#' : '|');
            put(r + 2, c, '+');
        } else {
            int r = row(e.a.y);
            int c = col(e.a.x);
            put(r, c, '+');
            for (int k = 1; k < kCellW; ++k) put(r, c + k, bold ? '=' : '-');
            put(r, c + kCellW, '+');
        }
    }

    std::string str() const {
        std::string out;
        for (auto& line : rows) {
            std::string trimmed = line;
            while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
            out += trimmed;
            out += '\n';
        }
        return out;
    }
};

}  // namespace

std::string render_ascii(const SnakeGraph& g, const std::optional<PerfectMatching>& overlay) {
    if (!g.has_tiles() && !g.is_degenerate_edge()) throw validation_error("cannot render an empty graph");
    int min_x = g.vertices().front().x, max_x = min_x, min_y = g.vertices().front().y, max_y = min_y;
    for (auto& v : g.vertices()) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    Canvas canvas(min_x, min_y, max_x, std::max(max_y, min_y + 1));

    for (auto& e : g.edges()) canvas.draw_edge(e, false);
    if (overlay) {
        for (auto& e : overlay->edges()) canvas.draw_edge(e, true);
    }
    for (auto& t : g.tiles()) {
        std::string label = std::to_string(t.label);
        if (label.size() > 3) label = "???";  // labels past 999 do not fit a cell
        int r = canvas.row(t.anchor.y) - 1;
        int c = canvas.col(t.anchor.x) + 1 + static_cast<int>((3 - label.size()) / 2);
        for (std::size_t k = 0; k < label.size(); ++k) canvas.put(r, c + static_cast<int>(k), label[k]);
    }
    return canvas.str();
}

std::string render_svg(const SnakeGraph& g, const std::optional<PerfectMatching>& overlay) {
    if (!g.has_tiles() && !g.is_degenerate_edge()) throw validation_error("cannot render an empty graph");
    constexpr int S = 40;   // pixels per lattice unit
    constexpr int pad = 10;
    int min_x = g.vertices().front().x, max_x = min_x, min_y = g.vertices().front().y, max_y = min_y;
    for (auto& v : g.vertices()) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    auto px = [&](int x) { return pad + (x - min_x) * S; };
    auto py = [&](int y) { return pad + (max_y - y) * S; };  // SVG y points down

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(px(max_x) + pad)
           + "\" height=\"" + std::to_string(py(min_y) + pad) + "\">\n";
    for (auto& t : g.tiles()) {
        out += "  <rect x=\"" + std::to_string(px(t.anchor.x)) + "\" y=\"" + std::to_string(py(t.anchor.y + 1))
               + "\" width=\"" + std::to_string(S) + "\" height=\"" + std::to_string(S)
               + "\" fill=\"white\" stroke=\"none\"/>\n";
    }
    for (auto& e : g.edges()) {
        out += "  <line x1=\"" + std::to_string(px(e.a.x)) + "\" y1=\"" + std::to_string(py(e.a.y))
               + "\" x2=\"" + std::to_string(px(e.b.x)) + "\" y2=\"" + std::to_string(py(e.b.y))
               + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    if (overlay) {
        for (auto& e : overlay->edges()) {
            out += "  <line x1=\"" + std::to_string(px(e.a.x)) + "\" y1=\"" + std::to_string(py(e.a.y))
                   + "\" x2=\"" + std::to_string(px(e.b.x)) + "\" y2=\"" + std::to_string(py(e.b.y))
                   + "\" stroke=\"black\" stroke-width=\"5\" stroke-linecap=\"round\"/>\n";
        }
    }
    for (auto& t : g.tiles()) {
        out += "  <text x=\"" + std::to_string(px(t.anchor.x) + S / 2) + "\" y=\""
               + std::to_string(py(t.anchor.y) - S / 2 + 5)
               + "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">"
               + std::to_string(t.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

nlohmann::ordered_json graph_to_json(const SnakeGraph& g) {
    nlohmann::ordered_json tiles = nlohmann::ordered_json::array();
    for (auto& t : g.tiles()) tiles.push_back({{"i", t.label}, {"x", t.anchor.x}, {"y", t.anchor.y}});
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (auto s : g.steps()) steps.push_back(std::string(1, step_letter(s)));
    return nlohmann::ordered_json{{"tiles", std::move(tiles)}, {"steps", std::move(steps)}};
}

nlohmann::ordered_json matchings_to_json(const std::vector<PerfectMatching>& matchings) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (auto& p : matchings) {
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (auto& e : p.edges()) edges.push_back(e.to_string());
        list.push_back(std::move(edges));
    }
    return nlohmann::ordered_json{{"count", matchings.size()}, {"matchings", std::move(list)}};
}

std::string export_poset_dot(const MatchingPoset& poset) {
    // emit nodes in height order so the file reads bottom-up
    std::vector<std::size_t> order(poset.nodes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (poset.enclosed[a].size() != poset.enclosed[b].size())
            return poset.enclosed[a].size() < poset.enclosed[b].size();
        return a < b;
    });

    std::string out = "digraph matching_poset {\n  rankdir=BT;\n";
    for (std::size_t i : order)
        out += "  n" + std::to_string(i) + " [label=\"" + poset.heights[i].to_text() + "\"];\n";
    for (auto& e : poset.up_edges)
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"y"
               + std::to_string(e.tile) + "\"];\n";
    out += "}\n";
    return out;
}

nlohmann::ordered_json poset_to_json(const MatchingPoset& poset) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (auto& e : poset.nodes[i].edges()) edges.push_back(e.to_string());
        nodes.push_back({{"height", poset.heights[i].to_text()}, {"matching", std::move(edges)}});
    }
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto& e : poset.up_edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"tile", e.tile}});
    return nlohmann::ordered_json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace snakefrac
