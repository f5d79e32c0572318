#include <sncolor/families.hpp>
#include <sncolor/error.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

using namespace sncolor;

namespace
{
    constexpr std::array family_names{
        std::pair{ Family::Path, "path" },
        std::pair{ Family::Cycle, "cycle" },
        std::pair{ Family::Complete, "complete" },
        std::pair{ Family::CompleteMultipartite, "complete-multipartite" },
        std::pair{ Family::Star, "star" },
        std::pair{ Family::Tree, "tree" },
        std::pair{ Family::Friendship, "friendship" },
        std::pair{ Family::Amalgam, "amalgam" },
        std::pair{ Family::Tadpole, "tadpole" },
        std::pair{ Family::Lollipop, "lollipop" },
        std::pair{ Family::CycleOfCliques, "cycle-of-cliques" },
        std::pair{ Family::CycleOfCliquesMinus, "cycle-of-cliques-minus" },
        std::pair{ Family::StackedTriangulation, "stacked-triangulation" },
        std::pair{ Family::Fan, "fan" },
        std::pair{ Family::Wheel, "wheel" },
        std::pair{ Family::SudokuGrid, "sudoku-grid" }
    };

    auto invalid(const FamilySpec & spec, const std::string & why) -> Error
    {
        return Error(ErrorCode::InvalidFamilyParams, spec.describe() + ": " + why);
    }

    auto require(bool condition, const FamilySpec & spec, const char * why) -> void
    {
        if (! condition)
            throw invalid(spec, why);
    }

    auto expected_order(const FamilySpec & s) -> long long
    {
        long long n = s.n, m = s.m, r = s.r, b = s.b;
        switch (s.family) {
            case Family::Path:
            case Family::Cycle:
            case Family::Complete:
            case Family::Tree:                 return n;
            case Family::CompleteMultipartite: return std::accumulate(s.parts.begin(), s.parts.end(), 0LL);
            case Family::Star:                 return m + 1;
            case Family::Friendship:           return 2 * m + 1;
            case Family::Amalgam:              return r + m * (n - r);
            case Family::Tadpole:
            case Family::Lollipop:             return n + m - 1;
            case Family::CycleOfCliques:
            case Family::CycleOfCliquesMinus:  return 2 * n + n * (m - 2);
            case Family::StackedTriangulation: return 3 + static_cast<long long>(s.attachments.size());
            case Family::Fan:
            case Family::Wheel:                return n + 1;
            case Family::SudokuGrid:           return b * b * b * b;
        }
        return 0;
    }

    auto add_clique(std::vector<Edge> & edges, const std::vector<Vertex> & members) -> void
    {
        for (std::size_t i = 0 ; i < members.size() ; ++i)
            for (std::size_t j = i + 1 ; j < members.size() ; ++j)
                edges.emplace_back(members[i], members[j]);
    }

    auto add_path(std::vector<Edge> & edges, const std::vector<Vertex> & members) -> void
    {
        for (std::size_t i = 0 ; i + 1 < members.size() ; ++i)
            edges.emplace_back(members[i], members[i + 1]);
    }

    auto cycle_of_cliques(const FamilySpec & s, bool keep_clique_rim_edges) -> Graph
    {
        int n = s.n, m = s.m, rim = 2 * n;
        std::vector<Edge> edges;
        for (int j = 0 ; j < rim ; ++j) {
            bool clique_edge = (j % 2 == 0);
            if (keep_clique_rim_edges || ! clique_edge)
                edges.emplace_back(j, (j + 1) % rim);
        }
        for (int i = 0 ; i < n ; ++i) {
            std::vector<Vertex> block;
            for (int j = 0 ; j < m - 2 ; ++j)
                block.push_back(rim + i * (m - 2) + j);
            add_clique(edges, block);
            for (auto y : block) {
                edges.emplace_back(2 * i, y);
                edges.emplace_back(2 * i + 1, y);
            }
        }
        return Graph::build(rim + n * (m - 2), edges);
    }
}

auto sncolor::to_string(Family family) -> std::string_view
{
    for (auto & [f, name] : family_names)
        if (f == family)
            return name;
    return "unknown";
}

auto sncolor::family_from_string(std::string_view name) -> std::optional<Family>
{
    for (auto & [f, n] : family_names)
        if (n == name)
            return f;
    return std::nullopt;
}

auto FamilySpec::path(int n) -> FamilySpec { return { .family = Family::Path, .n = n }; }
auto FamilySpec::cycle(int n) -> FamilySpec { return { .family = Family::Cycle, .n = n }; }
auto FamilySpec::complete(int n) -> FamilySpec { return { .family = Family::Complete, .n = n }; }
auto FamilySpec::complete_multipartite(std::vector<int> parts) -> FamilySpec
{
    return { .family = Family::CompleteMultipartite, .parts = std::move(parts) };
}
auto FamilySpec::star(int leaves) -> FamilySpec { return { .family = Family::Star, .m = leaves }; }
auto FamilySpec::tree(int n, std::uint64_t seed) -> FamilySpec { return { .family = Family::Tree, .n = n, .seed = seed }; }
auto FamilySpec::friendship(int triangles) -> FamilySpec { return { .family = Family::Friendship, .m = triangles }; }
auto FamilySpec::amalgam(int copies, int clique, int core) -> FamilySpec
{
    return { .family = Family::Amalgam, .n = clique, .m = copies, .r = core };
}
auto FamilySpec::tadpole(int cycle, int path) -> FamilySpec { return { .family = Family::Tadpole, .n = cycle, .m = path }; }
auto FamilySpec::lollipop(int clique, int path) -> FamilySpec { return { .family = Family::Lollipop, .n = clique, .m = path }; }
auto FamilySpec::cycle_of_cliques(int n, int clique) -> FamilySpec
{
    return { .family = Family::CycleOfCliques, .n = n, .m = clique };
}
auto FamilySpec::cycle_of_cliques_minus(int n, int clique) -> FamilySpec
{
    return { .family = Family::CycleOfCliquesMinus, .n = n, .m = clique };
}
auto FamilySpec::stacked_triangulation(std::vector<Edge> attachments) -> FamilySpec
{
    return { .family = Family::StackedTriangulation, .attachments = std::move(attachments) };
}
auto FamilySpec::fan(int n) -> FamilySpec { return { .family = Family::Fan, .n = n }; }
auto FamilySpec::wheel(int rim) -> FamilySpec { return { .family = Family::Wheel, .n = rim }; }
auto FamilySpec::sudoku_grid(int box_side) -> FamilySpec { return { .family = Family::SudokuGrid, .b = box_side }; }

auto FamilySpec::describe() const -> std::string
{
    std::ostringstream out;
    out << to_string(family) << "(";
    switch (family) {
        case Family::Path: case Family::Cycle: case Family::Complete: case Family::Fan: case Family::Wheel:
            out << "n=" << n;
            break;
        case Family::Star: case Family::Friendship:
            out << "m=" << m;
            break;
        case Family::Tree:
            out << "n=" << n << ",seed=" << seed;
            break;
        case Family::CompleteMultipartite:
            for (std::size_t i = 0 ; i < parts.size() ; ++i)
                out << (i ? "," : "") << parts[i];
            break;
        case Family::Amalgam:
            out << "m=" << m << ",n=" << n << ",r=" << r;
            break;
        case Family::Tadpole: case Family::Lollipop: case Family::CycleOfCliques: case Family::CycleOfCliquesMinus:
            out << "n=" << n << ",m=" << m;
            break;
        case Family::StackedTriangulation:
            for (std::size_t i = 0 ; i < attachments.size() ; ++i)
                out << (i ? "," : "") << attachments[i].first << "-" << attachments[i].second;
            break;
        case Family::SudokuGrid:
            out << "b=" << b;
            break;
    }
    out << ")";
    return out.str();
}

auto sncolor::validate(const FamilySpec & s) -> void
{
    switch (s.family) {
        case Family::Path:     require(s.n >= 1, s, "requires n >= 1"); break;
        case Family::Cycle:    require(s.n >= 3, s, "requires n >= 3"); break;
        case Family::Complete: require(s.n >= 1, s, "requires n >= 1"); break;
        case Family::CompleteMultipartite:
            require(! s.parts.empty(), s, "requires at least one part");
            for (auto p : s.parts)
                require(p >= 1, s, "every part needs at least one vertex");
            break;
        case Family::Star:       require(s.m >= 1, s, "requires m >= 1"); break;
        case Family::Tree:       require(s.n >= 1, s, "requires n >= 1"); break;
        case Family::Friendship: require(s.m >= 2, s, "requires m >= 2"); break;
        case Family::Amalgam:
            require(s.m >= 2 && s.n >= 3 && s.r >= 1 && s.r < s.n, s, "requires m >= 2, n >= 3, 1 <= r < n");
            break;
        case Family::Tadpole:  require(s.n >= 3 && s.m >= 2, s, "requires n >= 3, m >= 2"); break;
        case Family::Lollipop: require(s.n >= 4 && s.m >= 2, s, "requires n >= 4, m >= 2"); break;
        case Family::CycleOfCliques:
            require(s.n >= 2 && s.m >= 3, s, "requires n >= 2, m >= 3");
            break;
        case Family::CycleOfCliquesMinus:
            require(s.n >= 2 && s.m >= 4, s, "requires n >= 2, m >= 4");
            break;
        case Family::StackedTriangulation: {
            int order = 3;
            for (auto [u, v] : s.attachments) {
                require(u >= 0 && v >= 0 && u < order && v < order && u != v, s, "attachment must name two existing vertices");
                ++order;
            }
            break;
        }
        case Family::Fan:        require(s.n >= 2, s, "requires n >= 2"); break;
        case Family::Wheel:      require(s.n >= 3, s, "requires n >= 3"); break;
        case Family::SudokuGrid: require(s.b >= 1 && s.b <= 10, s, "requires 1 <= b <= 10"); break;
    }

    if (expected_order(s) > default_max_vertices)
        throw invalid(s, "order exceeds " + std::to_string(default_max_vertices) + " vertices");
}

auto sncolor::random_tree(int n, std::uint64_t seed) -> Graph
{
    std::vector<Edge> edges;
    if (n == 2)
        edges.emplace_back(0, 1);
    else if (n > 2) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> code(n - 2);
        for (auto & c : code)
            c = pick(rng);

        std::vector<int> degree(n, 1);
        for (auto c : code)
            ++degree[c];

        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0 ; v < n ; ++v)
            if (degree[v] == 1)
                leaves.push(v);

        for (auto c : code) {
            int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(leaf, c);
            if (--degree[c] == 1)
                leaves.push(c);
        }
        int a = leaves.top();
        leaves.pop();
        edges.emplace_back(a, leaves.top());
    }
    return Graph::build(n, edges);
}

auto sncolor::generate(const FamilySpec & s) -> Graph
{
    validate(s);

    std::vector<Edge> edges;
    switch (s.family) {
        case Family::Path: {
            std::vector<Vertex> p(s.n);
            std::iota(p.begin(), p.end(), 0);
            add_path(edges, p);
            return Graph::build(s.n, edges);
        }

        case Family::Cycle:
            for (int i = 0 ; i < s.n ; ++i)
                edges.emplace_back(i, (i + 1) % s.n);
            return Graph::build(s.n, edges);

        case Family::Complete: {
            std::vector<Vertex> all(s.n);
            std::iota(all.begin(), all.end(), 0);
            add_clique(edges, all);
            return Graph::build(s.n, edges);
        }

        case Family::CompleteMultipartite: {
            std::vector<int> part_of;
            for (std::size_t p = 0 ; p < s.parts.size() ; ++p)
                part_of.insert(part_of.end(), s.parts[p], static_cast<int>(p));
            int n = static_cast<int>(part_of.size());
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    if (part_of[u] != part_of[v])
                        edges.emplace_back(u, v);
            return Graph::build(n, edges);
        }

        case Family::Star:
            for (int leaf = 1 ; leaf <= s.m ; ++leaf)
                edges.emplace_back(0, leaf);
            return Graph::build(s.m + 1, edges);

        case Family::Tree:
            return random_tree(s.n, s.seed);

        case Family::Friendship:
            return generate(FamilySpec::amalgam(s.m, 3, 1));

        case Family::Amalgam: {
            int block = s.n - s.r;
            for (int copy = 0 ; copy < s.m ; ++copy) {
                std::vector<Vertex> clique;
                for (int c = 0 ; c < s.r ; ++c)
                    clique.push_back(c);
                for (int j = 0 ; j < block ; ++j)
                    clique.push_back(s.r + copy * block + j);
                add_clique(edges, clique);
            }
            return Graph::build(s.r + s.m * block, edges);
        }

        case Family::Tadpole:
        case Family::Lollipop: {
            std::vector<Vertex> head(s.n);
            std::iota(head.begin(), head.end(), 0);
            if (s.family == Family::Lollipop)
                add_clique(edges, head);
            else
                for (int i = 0 ; i < s.n ; ++i)
                    edges.emplace_back(i, (i + 1) % s.n);

            std::vector<Vertex> tail{ 0 };
            for (int j = 2 ; j <= s.m ; ++j)
                tail.push_back(s.n + j - 2);
            add_path(edges, tail);
            return Graph::build(s.n + s.m - 1, edges);
        }

        case Family::CycleOfCliques:
            return cycle_of_cliques(s, true);

        case Family::CycleOfCliquesMinus:
            return cycle_of_cliques(s, false);

        case Family::StackedTriangulation: {
            edges = { { 0, 1 }, { 0, 2 }, { 1, 2 } };
            int order = 3;
            for (auto [u, v] : s.attachments) {
                auto key = Edge{ std::min(u, v), std::max(u, v) };
                if (std::find(edges.begin(), edges.end(), key) == edges.end())
                    throw invalid(s, "attachment " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
                edges.emplace_back(u, order);
                edges.emplace_back(v, order);
                ++order;
            }
            return Graph::build(order, edges);
        }

        case Family::Fan:
        case Family::Wheel: {
            for (int i = 0 ; i + 1 < s.n ; ++i)
                edges.emplace_back(i, i + 1);
            if (s.family == Family::Wheel)
                edges.emplace_back(0, s.n - 1);
            for (int i = 0 ; i < s.n ; ++i)
                edges.emplace_back(i, s.n);
            return Graph::build(s.n + 1, edges);
        }

        case Family::SudokuGrid: {
            int b = s.b, side = b * b, cells = side * side;
            for (int u = 0 ; u < cells ; ++u)
                for (int v = u + 1 ; v < cells ; ++v) {
                    int ru = u / side, cu = u % side, rv = v / side, cv = v % side;
                    bool same_box = (ru / b == rv / b) && (cu / b == cv / b);
                    if (ru == rv || cu == cv || same_box)
                        edges.emplace_back(u, v);
                }
            return Graph::build(cells, edges);
        }
    }

    throw invalid(s, "unknown family");
}
