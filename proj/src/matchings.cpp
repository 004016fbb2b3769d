#include "snakefrac/matchings.hpp"

#include <algorithm>
#include <map>

#include "snakefrac/errors.hpp"

namespace snakefrac {

namespace {

struct Enumerator {
    const std::vector<Point>& vertices;            // row-major
    std::vector<std::vector<std::size_t>> incident;  // vertex index -> edge indices
    std::vector<Edge> edges;
    std::vector<std::pair<std::size_t, std::size_t>> ends;  // edge -> vertex indices
    std::vector<char> covered;
    std::vector<Edge> chosen;
    std::vector<PerfectMatching> out;

    explicit Enumerator(const SnakeGraph& g) : vertices(g.vertices()) {
        std::map<Point, std::size_t> index;
        for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
        edges = g.edges();
        incident.resize(vertices.size());
        ends.reserve(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            std::size_t ia = index[edges[e].a], ib = index[edges[e].b];
            ends.emplace_back(ia, ib);
            incident[ia].push_back(e);
            incident[ib].push_back(e);
        }
        covered.assign(vertices.size(), 0);
    }

    void search(std::size_t from) {
        while (from < covered.size() && covered[from]) ++from;
        if (from == covered.size()) {
            out.emplace_back(chosen);
            return;
        }
        for (std::size_t e : incident[from]) {
            auto [ia, ib] = ends[e];
            std::size_t other = ia == from ? ib : ia;
            if (covered[other]) continue;
            covered[from] = covered[other] = 1;
            chosen.push_back(edges[e]);
            search(from + 1);
            chosen.pop_back();
            covered[from] = covered[other] = 0;
        }
    }
};

}  // namespace

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g, unsigned long long limit) {
    mpz_class predicted = g.matching_count();
    if (predicted > mpz_class(static_cast<unsigned long>(limit))) throw limit_error(predicted, limit);

    // Each matching stores one edge per vertex pair, so the output holds
    // N * (d+1) edges. Refuse sizes that cannot fit in memory even when the
    // count itself is under the limit (long thin graphs).
    mpz_class cells = predicted * (g.tile_count() + 1);
    if (cells > 80'000'000)
        throw limit_error("enumerating " + predicted.get_str() + " matchings of " + std::to_string(g.tile_count())
                              + " tiles would materialize " + cells.get_str() + " edges",
                          predicted, limit);

    if (g.vertices().empty()) return {PerfectMatching()};  // empty graph: the empty matching

    Enumerator en(g);
    en.out.reserve(predicted.get_ui());
    en.search(0);
    std::sort(en.out.begin(), en.out.end());
    internal_check(mpz_class(static_cast<unsigned long>(en.out.size())) == predicted,
                   "enumeration found " + std::to_string(en.out.size()) + " matchings, expected "
                       + predicted.get_str());
    return std::move(en.out);
}

std::vector<int> flippable_tiles(const SnakeGraph& g, const PerfectMatching& p) {
    if (!g.is_perfect_matching(p)) throw validation_error("not a perfect matching of this graph");
    std::vector<int> labels;
    for (auto& t : g.tiles()) {
        int hits = 0;
        for (auto& e : t.sides()) hits += p.contains(e) ? 1 : 0;
        if (hits == 2) labels.push_back(t.label);
    }
    return labels;
}

PerfectMatching flip_tile(const SnakeGraph& g, const PerfectMatching& p, int label) {
    if (!g.is_perfect_matching(p)) throw validation_error("not a perfect matching of this graph");
    const Tile& t = g.tile_by_label(label);
    std::vector<Edge> in, other;
    for (auto& e : t.sides())
        (p.contains(e) ? in : other).push_back(e);
    if (in.size() != 2)
        throw validation_error("tile " + std::to_string(label) + " is not flippable: "
                               + std::to_string(in.size()) + " of its edges are matched");
    std::vector<Edge> edges;
    for (auto& e : p.edges())
        if (e != in[0] && e != in[1]) edges.push_back(e);
    edges.insert(edges.end(), other.begin(), other.end());
    PerfectMatching q{std::move(edges)};
    internal_check(g.is_perfect_matching(q), "flip must preserve perfection");
    return q;
}

std::vector<int> enclosed_tile_labels(const SnakeGraph& g, const PerfectMatching& p, const PerfectMatching& base) {
    if (!g.is_perfect_matching(p) || !g.is_perfect_matching(base))
        throw validation_error("height needs two perfect matchings of the graph");
    PerfectMatching diff = p.symmetric_difference(base);
    std::vector<int> labels;
    for (auto& t : g.tiles()) {
        // Cast a ray from the tile center toward +x; the center has
        // half-integer coordinates, so only vertical edges with the tile's
        // row can cross, and only strictly to the right of the center.
        int crossings = 0;
        for (auto& e : diff.edges()) {
            if (!e.is_vertical()) continue;
            if (e.a.y != t.anchor.y) continue;
            if (e.a.x > t.anchor.x) ++crossings;
        }
        if (crossings % 2 == 1) labels.push_back(t.label);
    }
    return labels;
}

Monomial matching_height(const SnakeGraph& g, const PerfectMatching& p, const PerfectMatching& base) {
    std::vector<std::pair<int, int>> factors;
    for (int label : enclosed_tile_labels(g, p, base)) factors.emplace_back(label, 1);
    return Monomial::from_factors(std::move(factors));
}

LaurentPolynomial fpoly_from_matchings(const SnakeGraph& g, const PerfectMatching& base, unsigned long long limit) {
    LaurentPolynomial total;
    for (auto& p : enumerate_matchings(g, limit))
        total = total.plus(LaurentPolynomial::from_monomial(matching_height(g, p, base)));
    return total;
}

LaurentPolynomial fpoly_from_matchings(const SnakeGraph& g, unsigned long long limit) {
    return fpoly_from_matchings(g, g.minimal_matching(), limit);
}

int MatchingPoset::node_index(const PerfectMatching& p) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
    if (it == nodes.end() || !(*it == p)) throw validation_error("matching is not a node of this poset");
    return static_cast<int>(it - nodes.begin());
}

int MatchingPoset::source() const {
    std::vector<int> in(nodes.size(), 0);
    for (auto& e : up_edges) ++in[static_cast<std::size_t>(e.to)];
    int found = -1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (in[i] == 0) {
            internal_check(found < 0, "matching poset has more than one source");
            found = static_cast<int>(i);
        }
    }
    internal_check(found >= 0, "matching poset has no source");
    return found;
}

int MatchingPoset::sink() const {
    std::vector<int> out(nodes.size(), 0);
    for (auto& e : up_edges) ++out[static_cast<std::size_t>(e.from)];
    int found = -1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (out[i] == 0) {
            internal_check(found < 0, "matching poset has more than one sink");
            found = static_cast<int>(i);
        }
    }
    internal_check(found >= 0, "matching poset has no sink");
    return found;
}

MatchingPoset build_matching_poset(const SnakeGraph& g, unsigned long long limit) {
    MatchingPoset poset;
    poset.nodes = enumerate_matchings(g, limit);
    PerfectMatching minimal = g.minimal_matching();

    poset.enclosed.reserve(poset.nodes.size());
    poset.heights.reserve(poset.nodes.size());
    for (auto& p : poset.nodes) {
        std::vector<int> labels = enclosed_tile_labels(g, p, minimal);
        std::vector<std::pair<int, int>> factors;
        for (int label : labels) factors.emplace_back(label, 1);
        poset.heights.push_back(Monomial::from_factors(std::move(factors)));
        poset.enclosed.push_back(std::move(labels));
    }

    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        for (int t : flippable_tiles(g, poset.nodes[i])) {
            PerfectMatching q = flip_tile(g, poset.nodes[i], t);
            std::size_t j = static_cast<std::size_t>(poset.node_index(q));
            // up-edge iff the enclosed set grows by exactly {t}
            const auto& a = poset.enclosed[i];
            const auto& b = poset.enclosed[j];
            if (b.size() != a.size() + 1) continue;
            std::vector<int> grown;
            std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(grown));
            bool shrunk_none = std::includes(b.begin(), b.end(), a.begin(), a.end());
            if (shrunk_none && grown.size() == 1 && grown[0] == t)
                poset.up_edges.push_back({static_cast<int>(i), static_cast<int>(j), t});
        }
    }
    std::sort(poset.up_edges.begin(), poset.up_edges.end());
    return poset;
}

}  // namespace snakefrac
