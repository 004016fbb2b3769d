#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "snakefrac/render.hpp"

using namespace snakefrac;

TEST_CASE("ascii strip") {
    SnakeGraph g = build_snake_graph(ContinuedFraction({2, 2}));
    CHECK(render_ascii(g) ==
          "+---+---+---+\n"
          "| 1 | 2 | 3 |\n"
          "+---+---+---+\n");
}

TEST_CASE("ascii staircase") {
    SnakeGraph g = build_snake_graph(ContinuedFraction({4}));
    CHECK(render_ascii(g) ==
          "    +---+\n"
          "    | 3 |\n"
          "+---+---+\n"
          "| 1 | 2 |\n"
          "+---+---+\n");
}

TEST_CASE("ascii overlay doubles the matched edges") {
    SnakeGraph g = build_snake_graph(ContinuedFraction({2, 2}));
    std::string art = render_ascii(g, g.minimal_matching());
    CHECK(art ==
          "+===+---+===+\n"
          "| 1 | 2 | 3 |\n"
          "+===+---+===+\n");
    // exactly four doubled horizontal runs, none vertical
    std::size_t bold = 0;
    for (char c : art) bold += c == '=' ? 1 : 0;
    CHECK(bold == 4 * 3);
    CHECK(art.find('#') == std::string::npos);
}

TEST_CASE("ascii is deterministic") {
    SnakeGraph g = build_snake_graph(ContinuedFraction({2, 3, 4}));
    CHECK(render_ascii(g) == render_ascii(g));
    CHECK(render_ascii(g, g.maximal_matching()) == render_ascii(g, g.maximal_matching()));
}

TEST_CASE("svg contains tiles, edges and labels") {
    SnakeGraph g = build_snake_graph(ContinuedFraction({2, 2}));
    std::string svg = render_svg(g, g.minimal_matching());
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t rects = 0, lines = 0, texts = 0, thick = 0;
    for (std::size_t pos = 0; (pos = svg.find("<rect", pos)) != std::string::npos; ++pos) ++rects;
    for (std::size_t pos = 0; (pos = svg.find("<line", pos)) != std::string::npos; ++pos) ++lines;
    for (std::size_t pos = 0; (pos = svg.find("<text", pos)) != std::string::npos; ++pos) ++texts;
    for (std::size_t pos = 0; (pos = svg.find("stroke-width=\"5\"", pos)) != std::string::npos; ++pos) ++thick;
    CHECK(rects == 3);
    CHECK(lines == 10 + 4);  // every edge once, plus the overlay
    CHECK(texts == 3);
    CHECK(thick == 4);
}

TEST_CASE("graph json dump") {
    SnakeGraph g = build_snake_graph(ContinuedFraction({2, 2}));
    nlohmann::json j = graph_to_json(g);
    CHECK(j["steps"] == nlohmann::json::array({"R", "R"}));
    REQUIRE(j["tiles"].size() == 3);
    CHECK(j["tiles"][0] == nlohmann::json({{"i", 1}, {"x", 0}, {"y", 0}}));
    CHECK(j["tiles"][2] == nlohmann::json({{"i", 3}, {"x", 2}, {"y", 0}}));
}

TEST_CASE("matchings json") {
    SnakeGraph g = build_snake_graph(ContinuedFraction({2, 2}));
    nlohmann::json j = matchings_to_json(enumerate_matchings(g));
    CHECK(j["count"] == 5);
    CHECK(j["matchings"].size() == 5);
}

TEST_CASE("poset dot export") {
    MatchingPoset chain = build_matching_poset(build_snake_graph(ContinuedFraction({4})));
    std::string dot = export_poset_dot(chain);
    CHECK(dot.rfind("digraph matching_poset", 0) == 0);
    std::size_t arrows = 0;
    for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++arrows;
    CHECK(arrows == 3);
    CHECK(dot.find("[label=\"1\"]") != std::string::npos);

    MatchingPoset diamond = build_matching_poset(build_snake_graph(ContinuedFraction({2, 2})));
    std::string dot2 = export_poset_dot(diamond);
    arrows = 0;
    for (std::size_t pos = 0; (pos = dot2.find("->", pos)) != std::string::npos; ++pos) ++arrows;
    CHECK(arrows == 5);

    // the source node (label "1") never appears as an edge target
    int source = diamond.source();
    CHECK(dot2.find("-> n" + std::to_string(source)) == std::string::npos);
}

TEST_CASE("poset json") {
    MatchingPoset poset = build_matching_poset(build_snake_graph(ContinuedFraction({2, 2})));
    nlohmann::json j = poset_to_json(poset);
    CHECK(j["nodes"].size() == 5);
    CHECK(j["edges"].size() == 5);
}

TEST_CASE("rendering the degenerate single edge") {
    SnakeGraph e = SnakeGraph::single_edge();
    std::string art = render_ascii(e);
    CHECK(art.find('+') != std::string::npos);
}
