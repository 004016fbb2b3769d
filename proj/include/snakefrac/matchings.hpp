#pragma once

#include <cstdint>
#include <vector>

#include "snakefrac/laurent.hpp"
#include "snakefrac/snakegraph.hpp"

namespace snakefrac {

inline constexpr unsigned long long kDefaultMatchingLimit = 2'000'000;

// All perfect matchings of g, in canonical (sorted edge list) order.
// The count is predicted in closed form first; a prediction above the
// limit raises limit_error before any enumeration happens.
std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g,
                                                 unsigned long long limit = kDefaultMatchingLimit);

// Labels of tiles with two (opposite) edges in p.
std::vector<int> flippable_tiles(const SnakeGraph& g, const PerfectMatching& p);

// Swap the two matched edges of the tile for its other two edges.
PerfectMatching flip_tile(const SnakeGraph& g, const PerfectMatching& p, int label);

// Labels of tiles enclosed by the symmetric difference p (-) base, which
// decomposes into disjoint simple lattice cycles; a tile counts when its
// center lies strictly inside one of them (even-odd rule).
std::vector<int> enclosed_tile_labels(const SnakeGraph& g, const PerfectMatching& p, const PerfectMatching& base);

// prod y_label over the enclosed tiles; equals 1 when p == base.
Monomial matching_height(const SnakeGraph& g, const PerfectMatching& p, const PerfectMatching& base);

// Sum of height monomials over all perfect matchings, measured from base.
LaurentPolynomial fpoly_from_matchings(const SnakeGraph& g, const PerfectMatching& base,
                                       unsigned long long limit = kDefaultMatchingLimit);
LaurentPolynomial fpoly_from_matchings(const SnakeGraph& g,
                                       unsigned long long limit = kDefaultMatchingLimit);

struct PosetEdge {
    int from = 0;
    int to = 0;
    int tile = 0;

    friend bool operator==(const PosetEdge&, const PosetEdge&) = default;
    friend auto operator<=>(const PosetEdge&, const PosetEdge&) = default;
};

// The poset of perfect matchings: an up-edge (P, P', t) whenever P' is the
// flip of P at tile t and the enclosed-tile set grows by exactly {t}.
// Heights are measured from the minimal matching.
struct MatchingPoset {
    std::vector<PerfectMatching> nodes;           // canonical order
    std::vector<Monomial> heights;                // parallel to nodes
    std::vector<std::vector<int>> enclosed;       // parallel: sorted tile labels
    std::vector<PosetEdge> up_edges;              // sorted

    int node_index(const PerfectMatching& p) const;
    int source() const;  // unique node with in-degree 0
    int sink() const;    // unique node with out-degree 0
};

MatchingPoset build_matching_poset(const SnakeGraph& g, unsigned long long limit = kDefaultMatchingLimit);

}  // namespace snakefrac
