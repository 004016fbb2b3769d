#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "snakefrac/matchings.hpp"
#include "snakefrac/snakegraph.hpp"

namespace snakefrac {

// Character-grid drawing: each tile is 3 columns by 1 row of interior plus
// shared borders, labels centered. Overlay edges are doubled: '=' for
// horizontal, '#' for vertical.
std::string render_ascii(const SnakeGraph& g, const std::optional<PerfectMatching>& overlay = std::nullopt);

std::string render_svg(const SnakeGraph& g, const std::optional<PerfectMatching>& overlay = std::nullopt);

// {"tiles":[{"i":1,"x":0,"y":0},...],"steps":["R","U",...]}
nlohmann::ordered_json graph_to_json(const SnakeGraph& g);

// {"count":...,"matchings":[["(0,0)-(1,0)",...],...]}
nlohmann::ordered_json matchings_to_json(const std::vector<PerfectMatching>& matchings);

// DOT digraph of the matching poset: nodes labeled by height monomials,
// edges labeled by the turned tile's variable, emitted bottom-up.
std::string export_poset_dot(const MatchingPoset& poset);

nlohmann::ordered_json poset_to_json(const MatchingPoset& poset);

}  // namespace snakefrac
