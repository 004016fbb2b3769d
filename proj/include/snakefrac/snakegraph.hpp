#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "snakefrac/contfrac.hpp"

namespace snakefrac {

// Lattice point. Ordered row-major: by y, then x.
struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) {
        if (a.y != b.y) return a.y <=> b.y;
        return a.x <=> b.x;
    }

    std::string to_string() const;  // "(0,1)"
};

// Unit axis-aligned lattice edge, endpoints normalized so a < b.
struct Edge {
    Point a;
    Point b;

    Edge() = default;
    Edge(Point p, Point q);

    bool is_vertical() const { return a.x == b.x; }

    std::string to_string() const;  // "(0,0)-(1,0)"

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& x, const Edge& y) {
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }
};

// Unit square tile. The label is inherited from the parent graph when the
// tile lives in a subgraph; for a full graph, label == position index.
struct Tile {
    int label = 0;
    Point anchor;  // lower-left corner

    Point center2() const { return {2 * anchor.x + 1, 2 * anchor.y + 1}; }  // doubled coords
    std::vector<Edge> sides() const;                                        // south, north, west, east
    Edge south() const;
    Edge north() const;
    Edge west() const;
    Edge east() const;

    friend bool operator==(const Tile&, const Tile&) = default;
};

enum class Step : std::uint8_t { Right, Up };

char step_letter(Step s);

// An edge subset covering every vertex exactly once. Stored as a sorted
// edge list; equality and serialization are canonical.
class PerfectMatching {
public:
    PerfectMatching() = default;
    explicit PerfectMatching(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool contains(const Edge& e) const;

    PerfectMatching symmetric_difference(const PerfectMatching& other) const;

    std::string to_string() const;  // "(0,0)-(1,0) (2,0)-(3,0) ..."

    friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
    friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) { return a.edges_ <=> b.edges_; }

private:
    std::vector<Edge> edges_;
};

// A chain of unit square tiles, each placed right of or above its
// predecessor, consecutive tiles sharing exactly one edge. A zero-tile
// graph is either the degenerate single-edge graph (the empty continued
// fraction's graph) or a truly empty subgraph.
class SnakeGraph {
public:
    SnakeGraph() = default;

    // The empty continued fraction's graph: one edge, one perfect matching.
    static SnakeGraph single_edge();

    static SnakeGraph from_tiles(std::vector<Tile> tiles, std::vector<Step> steps);

    int tile_count() const { return static_cast<int>(tiles_.size()); }
    bool has_tiles() const { return !tiles_.empty(); }
    bool is_degenerate_edge() const { return degenerate_edge_; }

    const std::vector<Tile>& tiles() const { return tiles_; }
    const std::vector<Step>& steps() const { return steps_; }

    const Tile& tile_by_label(int label) const;

    // Every edge, sorted. Interior edge k (1-based) is shared by tiles k, k+1.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Edge>& interior_edges() const { return interior_; }
    const std::vector<Edge>& boundary_edges() const { return boundary_; }
    Edge interior_edge(int k) const;

    const std::vector<Point>& vertices() const { return vertices_; }  // row-major

    // The two all-boundary matchings. The minimal one contains the south
    // edge of the first tile.
    PerfectMatching minimal_matching() const;
    PerfectMatching maximal_matching() const;

    bool is_perfect_matching(const PerfectMatching& p) const;
    bool is_zigzag() const;  // steps strictly alternate

    // Inverse of the continued-fraction construction: reads the turn
    // pattern back off the steps. Canonical (first and last entry >= 2).
    ContinuedFraction recovered_continued_fraction() const;

    // Number of perfect matchings, known in closed form before enumerating.
    mpz_class matching_count() const;

private:
    std::vector<Tile> tiles_;
    std::vector<Step> steps_;
    bool degenerate_edge_ = false;

    std::vector<Edge> edges_;
    std::vector<Edge> interior_;
    std::vector<Edge> boundary_;
    std::vector<Point> vertices_;

    void index_edges();
};

// The snake graph of a continued fraction: d = (a_1+...+a_n) - 1 tiles,
// first tile anchored at (0,0). The snake goes straight at the connecting
// tiles (positions a_1+...+a_i for i < n) and turns everywhere else.
// Requires a_1 >= 2. The first step is Right unless asked otherwise; the
// Up variant is the mirror image and yields identical F-polynomials.
SnakeGraph build_snake_graph(const ContinuedFraction& cf, Step first_step = Step::Right);

// The zigzag subgraph of tiles a_1+..+a_{i-1}+1 .. a_1+..+a_i - 1, with
// inherited labels and lattice positions. Empty when a_i == 1.
SnakeGraph subgraph_zigzag(const SnakeGraph& g, const ContinuedFraction& cf, int i);

// The completed minimal matching of the i-th zigzag subgraph: the parent's
// minimal matching restricted to the subgraph, plus at most one interior
// edge of the parent, chosen by the parity of i.
PerfectMatching completed_minimal_matching(const SnakeGraph& g, const ContinuedFraction& cf, int i);

}  // namespace snakefrac
