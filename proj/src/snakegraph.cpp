#include "snakefrac/snakegraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "snakefrac/errors.hpp"

namespace snakefrac {

std::string Point::to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

Edge::Edge(Point p, Point q) : a(p), b(q) {
    if (b < a) std::swap(a, b);
    int dx = b.x - a.x, dy = b.y - a.y;
    if (dx * dx + dy * dy != 1) throw validation_error("edge endpoints must be lattice neighbours");
}

std::string Edge::to_string() const {
    return a.to_string() + "-" + b.to_string();
}

Edge Tile::south() const { return Edge({anchor.x, anchor.y}, {anchor.x + 1, anchor.y}); }
Edge Tile::north() const { return Edge({anchor.x, anchor.y + 1}, {anchor.x + 1, anchor.y + 1}); }
Edge Tile::west() const { return Edge({anchor.x, anchor.y}, {anchor.x, anchor.y + 1}); }
Edge Tile::east() const { return Edge({anchor.x + 1, anchor.y}, {anchor.x + 1, anchor.y + 1}); }

std::vector<Edge> Tile::sides() const {
    return {south(), north(), west(), east()};
}

char step_letter(Step s) { return s == Step::Right ? 'R' : 'U'; }

PerfectMatching::PerfectMatching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool PerfectMatching::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

PerfectMatching PerfectMatching::symmetric_difference(const PerfectMatching& other) const {
    std::vector<Edge> out;
    std::set_symmetric_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                                  std::back_inserter(out));
    return PerfectMatching(std::move(out));
}

std::string PerfectMatching::to_string() const {
    std::string out;
    for (auto& e : edges_) {
        if (!out.empty()) out += ' ';
        out += e.to_string();
    }
    return out;
}

SnakeGraph SnakeGraph::single_edge() {
    SnakeGraph g;
    g.degenerate_edge_ = true;
    g.edges_ = {Edge({0, 0}, {1, 0})};
    g.vertices_ = {{0, 0}, {1, 0}};
    return g;
}

SnakeGraph SnakeGraph::from_tiles(std::vector<Tile> tiles, std::vector<Step> steps) {
    SnakeGraph g;
    g.tiles_ = std::move(tiles);
    g.steps_ = std::move(steps);
    if (!g.tiles_.empty() && g.steps_.size() + 1 != g.tiles_.size())
        throw validation_error("a snake graph with d tiles has d-1 steps");
    for (std::size_t k = 0; k + 1 < g.tiles_.size(); ++k) {
        const Point& p = g.tiles_[k].anchor;
        const Point& q = g.tiles_[k + 1].anchor;
        Point want = g.steps_[k] == Step::Right ? Point{p.x + 1, p.y} : Point{p.x, p.y + 1};
        if (q != want) throw validation_error("tile anchors do not follow the step sequence");
    }
    g.index_edges();
    return g;
}

void SnakeGraph::index_edges() {
    std::set<Edge> all;
    std::set<Point> verts;
    for (auto& t : tiles_) {
        for (auto& e : t.sides()) {
            all.insert(e);
            verts.insert(e.a);
            verts.insert(e.b);
        }
    }
    interior_.clear();
    for (std::size_t k = 0; k + 1 < tiles_.size(); ++k) {
        // the shared edge of tiles k+1 and k+2: the east or north side of
        // tile k+1 depending on the step
        interior_.push_back(steps_[k] == Step::Right ? tiles_[k].east() : tiles_[k].north());
    }
    edges_.assign(all.begin(), all.end());
    std::set<Edge> interior_set(interior_.begin(), interior_.end());
    boundary_.clear();
    for (auto& e : edges_)
        if (!interior_set.count(e)) boundary_.push_back(e);
    vertices_.assign(verts.begin(), verts.end());
}

const Tile& SnakeGraph::tile_by_label(int label) const {
    for (auto& t : tiles_)
        if (t.label == label) return t;
    throw validation_error("no tile labeled " + std::to_string(label));
}

Edge SnakeGraph::interior_edge(int k) const {
    if (k < 1 || k > static_cast<int>(interior_.size()))
        throw validation_error("interior edge index " + std::to_string(k) + " out of range");
    return interior_[static_cast<std::size_t>(k) - 1];
}

PerfectMatching SnakeGraph::minimal_matching() const {
    if (degenerate_edge_) return PerfectMatching(edges_);
    if (tiles_.empty()) return PerfectMatching();

    // Walk the boundary cycle starting along the south edge of the first
    // tile and keep every other edge. The cycle passes through all 2d+2
    // vertices, so the alternation is a perfect matching. A graph drawn
    // with its first step Up is the diagonal mirror of the Right-first
    // drawing; the mirror maps the south edge of the first tile to its
    // west edge, so the start edge follows suit and height polynomials
    // stay invariant under reflection.
    std::map<Point, std::vector<Edge>> incident;
    for (auto& e : boundary_) {
        incident[e.a].push_back(e);
        incident[e.b].push_back(e);
    }
    for (auto& [v, es] : incident)
        internal_check(es.size() == 2, "boundary of a snake graph must be a single cycle");

    bool mirrored = !steps_.empty() && steps_.front() == Step::Up;
    Edge start = mirrored ? tiles_.front().west() : tiles_.front().south();
    std::vector<Edge> taken;
    Edge cur = start;
    Point at = start.b;  // walk direction: away from the a endpoint
    bool take = true;
    taken.push_back(start);
    for (;;) {
        auto& es = incident[at];
        Edge next = es[0] == cur ? es[1] : es[0];
        if (next == start) break;
        take = !take;
        if (take) taken.push_back(next);
        at = next.a == at ? next.b : next.a;
        cur = next;
    }
    internal_check(!take, "boundary cycle of a snake graph must have even length");
    PerfectMatching p{std::move(taken)};
    internal_check(is_perfect_matching(p), "boundary alternation must be a perfect matching");
    return p;
}

PerfectMatching SnakeGraph::maximal_matching() const {
    if (degenerate_edge_) return PerfectMatching(edges_);
    PerfectMatching minimal = minimal_matching();
    std::vector<Edge> rest;
    for (auto& e : boundary_)
        if (!minimal.contains(e)) rest.push_back(e);
    PerfectMatching p{std::move(rest)};
    internal_check(is_perfect_matching(p), "complementary boundary alternation must be a perfect matching");
    return p;
}

bool SnakeGraph::is_perfect_matching(const PerfectMatching& p) const {
    std::set<Point> covered;
    std::set<Edge> own(edges_.begin(), edges_.end());
    for (auto& e : p.edges()) {
        if (!own.count(e)) return false;
        if (!covered.insert(e.a).second) return false;
        if (!covered.insert(e.b).second) return false;
    }
    return covered.size() == vertices_.size();
}

bool SnakeGraph::is_zigzag() const {
    for (std::size_t k = 1; k < steps_.size(); ++k)
        if (steps_[k] == steps_[k - 1]) return false;
    return true;
}

ContinuedFraction SnakeGraph::recovered_continued_fraction() const {
    if (tiles_.empty()) return ContinuedFraction();
    int d = tile_count();
    std::vector<std::int64_t> entries;
    std::int64_t prev = 0;
    for (int k = 2; k <= d - 1; ++k) {
        if (steps_[static_cast<std::size_t>(k) - 1] == steps_[static_cast<std::size_t>(k) - 2]) {
            entries.push_back(k - prev);  // straight step: k is a connecting tile
            prev = k;
        }
    }
    entries.push_back(d + 1 - prev);
    return ContinuedFraction(std::move(entries));
}

mpz_class SnakeGraph::matching_count() const {
    return continuant(recovered_continued_fraction());
}

SnakeGraph build_snake_graph(const ContinuedFraction& cf, Step first_step) {
    if (cf.empty()) throw validation_error("cannot build a snake graph from an empty continued fraction");
    if (cf.entry(1) < 2) throw validation_error("snake graph construction needs a_1 >= 2");
    std::int64_t total = cf.partial_sum(cf.length());
    if (total - 1 > 1'000'000) throw validation_error("snake graph too large: " + std::to_string(total - 1) + " tiles");
    int d = static_cast<int>(total - 1);

    std::set<std::int64_t> connecting;
    for (int i = 1; i < cf.length(); ++i) connecting.insert(cf.partial_sum(i));

    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(d) - 1);
    for (int k = 1; k <= d - 1; ++k) {
        if (k == 1) {
            steps.push_back(first_step);
        } else if (connecting.count(k)) {
            steps.push_back(steps.back());
        } else {
            steps.push_back(steps.back() == Step::Right ? Step::Up : Step::Right);
        }
    }

    std::vector<Tile> tiles;
    tiles.reserve(static_cast<std::size_t>(d));
    Point at{0, 0};
    for (int k = 1; k <= d; ++k) {
        tiles.push_back(Tile{k, at});
        if (k <= d - 1) {
            if (steps[static_cast<std::size_t>(k) - 1] == Step::Right)
                at.x += 1;
            else
                at.y += 1;
        }
    }
    return SnakeGraph::from_tiles(std::move(tiles), std::move(steps));
}

SnakeGraph subgraph_zigzag(const SnakeGraph& g, const ContinuedFraction& cf, int i) {
    if (i < 1 || i > cf.length()) throw validation_error("subgraph index " + std::to_string(i) + " out of range");
    std::int64_t lo = cf.partial_sum(i - 1) + 1;
    std::int64_t hi = cf.partial_sum(i) - 1;
    if (hi > g.tile_count()) throw validation_error("continued fraction does not match the graph");
    if (lo > hi) return SnakeGraph();  // a_i == 1

    std::vector<Tile> tiles(g.tiles().begin() + (lo - 1), g.tiles().begin() + hi);
    std::vector<Step> steps;
    for (std::int64_t k = lo; k <= hi - 1; ++k) steps.push_back(g.steps()[static_cast<std::size_t>(k) - 1]);
    SnakeGraph h = SnakeGraph::from_tiles(std::move(tiles), std::move(steps));
    internal_check(h.is_zigzag(), "every entry's subgraph must be a zigzag");
    return h;
}

PerfectMatching completed_minimal_matching(const SnakeGraph& g, const ContinuedFraction& cf, int i) {
    SnakeGraph h = subgraph_zigzag(g, cf, i);
    if (!h.has_tiles()) throw validation_error("subgraph " + std::to_string(i) + " is empty (entry 1)");

    std::set<Edge> own(h.edges().begin(), h.edges().end());
    PerfectMatching parent = g.minimal_matching();
    std::vector<Edge> kept;
    for (auto& e : parent.edges())
        if (own.count(e)) kept.push_back(e);

    int n = cf.length();
    if (i == 1 || (i == n && n % 2 == 0)) {
        // restriction is already perfect
    } else if (i % 2 == 1) {
        kept.push_back(g.interior_edge(static_cast<int>(cf.partial_sum(i - 1))));
    } else {
        kept.push_back(g.interior_edge(static_cast<int>(cf.partial_sum(i)) - 1));
    }

    PerfectMatching p{std::move(kept)};
    internal_check(h.is_perfect_matching(p), "completed minimal matching must be perfect on the subgraph");
    return p;
}

}  // namespace snakefrac
