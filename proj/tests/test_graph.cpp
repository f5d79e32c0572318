#include "oracles.hpp"

#include <sncolor/error.hpp>
#include <sncolor/families.hpp>
#include <sncolor/io.hpp>

#include <doctest.h>

#include <random>
#include <regex>
#include <set>

using namespace sncolor;

namespace
{
    auto count(const std::string & text, const std::string & needle) -> int
    {
        int found = 0;
        for (auto pos = text.find(needle) ; pos != std::string::npos ; pos = text.find(needle, pos + 1))
            ++found;
        return found;
    }

    auto error_code(auto && f) -> std::optional<ErrorCode>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.code();
        }
        return std::nullopt;
    }
}

TEST_CASE("build")
{
    std::vector<Edge> triangle{ { 0, 1 }, { 1, 2 }, { 0, 2 } };
    auto k3 = Graph::build(3, triangle);
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(k3.adjacent(2, 0));

    std::vector<Edge> loop{ { 0, 0 } };
    CHECK(error_code([&] { Graph::build(2, loop); }) == ErrorCode::SelfLoop);

    std::vector<Edge> doubled{ { 0, 1 }, { 1, 0 }, { 1, 2 } };
    auto g = Graph::build(4, doubled);
    CHECK(g.size() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);

    std::vector<Edge> outside{ { 0, 3 } };
    CHECK(error_code([&] { Graph::build(3, outside); }) == ErrorCode::VertexOutOfRange);
    std::vector<Edge> negative{ { -1, 0 } };
    CHECK(error_code([&] { Graph::build(3, negative); }) == ErrorCode::VertexOutOfRange);
    CHECK(error_code([&] { Graph::build(10001, {}); }) == ErrorCode::GraphTooLarge);
    CHECK(error_code([&] { Graph::build(20, {}, 10); }) == ErrorCode::GraphTooLarge);
}

TEST_CASE("adjacency is symmetric and sorted")
{
    std::mt19937_64 rng(11);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto g = oracle::random_graph(rng, 9, 0.4);
        for (int u = 0 ; u < g.order() ; ++u) {
            auto nb = g.neighbours(u);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (int v : nb)
                CHECK(g.adjacent(v, u));
        }
        CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
        for (auto [u, v] : g.edges())
            CHECK(u < v);
    }
}

TEST_CASE("connectivity, bipartiteness and induced subgraphs")
{
    auto c5 = generate(FamilySpec::cycle(5));
    auto c6 = generate(FamilySpec::cycle(6));
    CHECK(c5.connected());
    CHECK_FALSE(c5.bipartite());
    CHECK(c6.bipartite());

    std::vector<Vertex> part{ 0, 1, 2 };
    auto p3 = c5.induced(part);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK_FALSE(p3.adjacent(0, 2));

    std::vector<Edge> split{ { 0, 1 }, { 2, 3 } };
    CHECK_FALSE(Graph::build(4, split).connected());
}

TEST_CASE("generated orders and sizes")
{
    auto tadpole = generate(FamilySpec::tadpole(3, 2));
    CHECK(tadpole.order() == 4);
    CHECK(tadpole.size() == 4);
    CHECK(tadpole.adjacent(0, 3));

    auto f2 = generate(FamilySpec::amalgam(2, 3, 1));
    CHECK(f2.order() == 5);
    CHECK(f2 == generate(FamilySpec::friendship(2)));

    auto minus = generate(FamilySpec::cycle_of_cliques_minus(5, 5));
    CHECK(minus.order() == 25);
    for (int v = 0 ; v < minus.order() ; ++v)
        CHECK(minus.degree(v) == 4);

    for (int m = 2 ; m <= 4 ; ++m)
        for (int n = 3 ; n <= 6 ; ++n)
            for (int r = 1 ; r < n ; ++r) {
                auto g = generate(FamilySpec::amalgam(m, n, r));
                CHECK(g.order() == r + m * (n - r));
                CHECK(g.size() == static_cast<std::size_t>(r * (r - 1) / 2 + m * (n * (n - 1) / 2 - r * (r - 1) / 2)));
            }

    for (int n = 2 ; n <= 6 ; ++n)
        for (int m = 3 ; m <= 6 ; ++m) {
            CHECK(generate(FamilySpec::cycle_of_cliques(n, m)).order() == 2 * n + n * (m - 2));
            if (m >= 4) {
                auto g = generate(FamilySpec::cycle_of_cliques_minus(n, m));
                for (int v = 0 ; v < g.order() ; ++v)
                    CHECK(g.degree(v) == m - 1);
            }
        }

    for (int n = 3 ; n <= 12 ; ++n) {
        auto w = generate(FamilySpec::wheel(n));
        CHECK(w.order() == n + 1);
        CHECK(w.degree(n) == n);
    }

    for (int b = 1 ; b <= 4 ; ++b) {
        auto g = generate(FamilySpec::sudoku_grid(b));
        CHECK(g.order() == b * b * b * b);
        for (int v = 0 ; v < g.order() ; ++v)
            CHECK(g.degree(v) == 3 * b * b - 2 * b - 1);
    }
    CHECK(generate(FamilySpec::sudoku_grid(3)).degree(40) == 20);

    auto lollipop = generate(FamilySpec::lollipop(4, 3));
    CHECK(lollipop.order() == 6);
    CHECK(lollipop.size() == 8);

    auto fan = generate(FamilySpec::fan(4));
    CHECK(fan.order() == 5);
    CHECK(fan.size() == 7);

    auto k222 = generate(FamilySpec::complete_multipartite({ 2, 2, 2 }));
    CHECK(k222.order() == 6);
    CHECK(k222.size() == 12);
    CHECK_FALSE(k222.adjacent(0, 1));

    auto star = generate(FamilySpec::star(4));
    CHECK(star.degree(0) == 4);

    auto stacked = generate(FamilySpec::stacked_triangulation({ { 0, 2 }, { 1, 2 }, { 2, 3 } }));
    CHECK(stacked.order() == 6);
    CHECK(stacked.size() == 3 + 2 * 3);
}

TEST_CASE("cycle of cliques labelling")
{
    // C_6(K_4): rim 0..5, block H^i = {6+2(i-1), 7+2(i-1)} joined to x_{2i-1}, x_{2i}.
    auto g = generate(FamilySpec::cycle_of_cliques(3, 4));
    for (int i = 0 ; i < 6 ; ++i)
        CHECK(g.adjacent(i, (i + 1) % 6));
    CHECK(g.adjacent(6, 0));
    CHECK(g.adjacent(6, 1));
    CHECK(g.adjacent(6, 7));
    CHECK_FALSE(g.adjacent(6, 2));
    CHECK(g.adjacent(8, 2));
    CHECK(g.adjacent(8, 3));

    auto minus = generate(FamilySpec::cycle_of_cliques_minus(3, 4));
    CHECK_FALSE(minus.adjacent(0, 1));
    CHECK(minus.adjacent(1, 2));
}

TEST_CASE("family parameter validation")
{
    auto invalid = [] (FamilySpec spec) { return error_code([&] { generate(spec); }) == ErrorCode::InvalidFamilyParams; };
    CHECK(invalid(FamilySpec::amalgam(1, 3, 1)));
    CHECK(invalid(FamilySpec::amalgam(2, 2, 1)));
    CHECK(invalid(FamilySpec::amalgam(2, 3, 3)));
    CHECK(invalid(FamilySpec::amalgam(2, 3, 0)));
    CHECK(invalid(FamilySpec::tadpole(2, 2)));
    CHECK(invalid(FamilySpec::tadpole(3, 1)));
    CHECK(invalid(FamilySpec::cycle_of_cliques(1, 3)));
    CHECK(invalid(FamilySpec::cycle_of_cliques(2, 2)));
    CHECK(invalid(FamilySpec::cycle_of_cliques_minus(2, 3)));
    CHECK(invalid(FamilySpec::wheel(2)));
    CHECK(invalid(FamilySpec::cycle(2)));
    CHECK(invalid(FamilySpec::sudoku_grid(0)));
    CHECK(invalid(FamilySpec::stacked_triangulation({ { 0, 3 } })));
    CHECK(invalid(FamilySpec::path(20000)));
    CHECK_FALSE(invalid(FamilySpec::amalgam(2, 3, 2)));
    CHECK_FALSE(invalid(FamilySpec::tadpole(3, 2)));
}

TEST_CASE("family names round trip")
{
    for (int i = 0 ; i <= static_cast<int>(Family::SudokuGrid) ; ++i) {
        auto f = static_cast<Family>(i);
        CHECK(family_from_string(to_string(f)) == f);
    }
    CHECK(family_from_string("cycle-of-cliques-minus") == Family::CycleOfCliquesMinus);
    CHECK_FALSE(family_from_string("hypercube"));
}

TEST_CASE("generators are deterministic")
{
    CHECK(generate(FamilySpec::tree(9, 4)) == generate(FamilySpec::tree(9, 4)));
    CHECK(random_tree(1, 0).order() == 1);
    for (std::uint64_t seed = 0 ; seed < 30 ; ++seed) {
        auto t = random_tree(10, seed);
        CHECK(t.size() == 9);
        CHECK(t.connected());
    }
}

TEST_CASE("edge list parsing")
{
    auto p3 = parse_graph("3 2\n0 1\n1 2", GraphFormat::EdgeList);
    CHECK(p3 == generate(FamilySpec::path(3)));

    auto out = error_code([] { parse_graph("3 1\n0 9", GraphFormat::EdgeList); });
    CHECK(out == ErrorCode::VertexOutOfRange);

    try {
        parse_graph("3 2\n0 1\n1 x\n", GraphFormat::EdgeList);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
        CHECK(e.byte() == 10);
    }

    CHECK(error_code([] { parse_graph("3 2\n0 1\n", GraphFormat::EdgeList); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_graph("2 1\n0 1\n5", GraphFormat::EdgeList); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_graph("", GraphFormat::EdgeList); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_graph("2 1\n1 1\n", GraphFormat::EdgeList); }) == ErrorCode::SelfLoop);
}

TEST_CASE("json serialization")
{
    auto k3 = generate(FamilySpec::complete(3));
    CHECK(serialize_graph(k3, GraphFormat::Json) == R"({"n":3,"edges":[[0,1],[0,2],[1,2]]})");
    CHECK(serialize_graph(k3, GraphFormat::EdgeList) == "3 3\n0 1\n0 2\n1 2\n");

    CHECK(detect_format("  {\"n\":1}") == GraphFormat::Json);
    CHECK(detect_format("1 0") == GraphFormat::EdgeList);
    CHECK(error_code([] { parse_graph("{\"n\":3,\"edges\":[[0,1]", GraphFormat::Json); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_graph("{\"n\":3}", GraphFormat::Json); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_graph("{\"n\":3,\"edges\":[[0,4]]}", GraphFormat::Json); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("parse and serialize round trip on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 30)(rng);
        auto g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0, 0.6)(rng));
        for (auto format : { GraphFormat::EdgeList, GraphFormat::Json }) {
            auto text = serialize_graph(g, format);
            CHECK(parse_graph(text, format) == g);
            CHECK(parse_graph(text, detect_format(text)) == g);
        }
    }
}

TEST_CASE("colouring json")
{
    PartialColoring c(5, 3);
    c.assign(0, 1);
    c.assign(3, 3);
    auto j = coloring_to_json(c);
    CHECK(j.dump() == R"({"k":3,"colors":{"0":1,"3":3}})");
    CHECK(coloring_from_json(j, 5) == c);
    CHECK(error_code([] { parse_coloring(R"({"k":3,"colors":{"0":4}})", 5); }) == ErrorCode::InvalidColoring);
    CHECK(error_code([] { parse_coloring(R"({"k":3,"colors":{"7":1}})", 5); }) == ErrorCode::VertexOutOfRange);
    CHECK(error_code([] { parse_coloring(R"({"k":3,"colors":)", 5); }) == ErrorCode::ParseError);
}

TEST_CASE("dot output")
{
    auto k3 = generate(FamilySpec::complete(3));
    auto plain = emit_dot(k3);
    CHECK(plain.starts_with("graph G {"));
    CHECK(count(plain, " -- ") == 3);
    CHECK(count(plain, "fillcolor") == 0);
    for (int v = 0 ; v < 3 ; ++v)
        CHECK(plain.find("  " + std::to_string(v) + ";") != std::string::npos);

    PartialColoring one(3, 3);
    one.assign(0, 1);
    auto partial = emit_dot(k3, one);
    CHECK(count(partial, "fillcolor") == 1);
    CHECK(partial.find("0 [label=\"0:1\"") != std::string::npos);

    auto c5 = generate(FamilySpec::cycle(5));
    PartialColoring full(5, 3);
    int colours[] = { 1, 2, 1, 2, 3 };
    for (int v = 0 ; v < 5 ; ++v)
        full.assign(v, colours[v]);
    auto dot = emit_dot(c5, full);
    CHECK(count(dot, "fillcolor") == 5);

    std::set<std::string> fills;
    std::regex fill("fillcolor=\"([^\"]+)\"");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), fill) ; it != std::sregex_iterator() ; ++it)
        fills.insert((*it)[1]);
    CHECK(fills.size() == 3);

    std::set<std::string> palette;
    for (int c = 1 ; c <= 40 ; ++c)
        palette.insert(dot_fill(c));
    CHECK(palette.size() == 40);
}
