#include <sncolor/chromatic.hpp>
#include <sncolor/error.hpp>

#include <algorithm>
#include <numeric>

using namespace sncolor;

namespace
{
    auto by_degree(const Graph & g) -> std::vector<Vertex>
    {
        std::vector<Vertex> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    class Dsatur
    {
        public:
            Dsatur(const Graph & g, int colour_bound, std::uint64_t max_nodes) :
                _g(g),
                _colour(g.order(), no_color),
                _neighbour_colours(g.order(), std::vector<int>(colour_bound + 2, 0)),
                _saturation(g.order(), 0),
                _max_nodes(max_nodes)
            {
            }

            auto assign(Vertex v, Color c) -> void
            {
                _colour[v] = c;
                ++_coloured;
                for (auto w : _g.neighbours(v))
                    if (_neighbour_colours[w][c]++ == 0)
                        ++_saturation[w];
            }

            auto unassign(Vertex v) -> void
            {
                auto c = _colour[v];
                _colour[v] = no_color;
                --_coloured;
                for (auto w : _g.neighbours(v))
                    if (--_neighbour_colours[w][c] == 0)
                        --_saturation[w];
            }

            auto pick() const -> Vertex
            {
                Vertex best = -1;
                for (Vertex v = 0 ; v < _g.order() ; ++v) {
                    if (_colour[v] != no_color)
                        continue;
                    if (best == -1 || _saturation[v] > _saturation[best]
                            || (_saturation[v] == _saturation[best] && _g.degree(v) > _g.degree(best)))
                        best = v;
                }
                return best;
            }

            auto free(Vertex v, Color c) const -> bool { return _neighbour_colours[v][c] == 0; }

            /// Plain DSATUR: colour each picked vertex with its smallest free colour.
            auto greedy() -> int
            {
                int used = 0;
                while (_coloured < _g.order()) {
                    auto v = pick();
                    Color c = 1;
                    while (! free(v, c))
                        ++c;
                    assign(v, c);
                    used = std::max(used, c);
                }
                return used;
            }

            auto search(int used, int lower_bound, int & best_k, std::vector<Color> & best) -> void
            {
                if (_max_nodes != 0 && _nodes >= _max_nodes)
                    throw BudgetExceeded("chromatic number search exceeded " + std::to_string(_max_nodes) + " nodes");
                ++_nodes;

                if (_coloured == _g.order()) {
                    if (used < best_k) {
                        best_k = used;
                        best = _colour;
                    }
                    return;
                }

                auto v = pick();
                for (Color c = 1 ; c <= std::min(used + 1, best_k - 1) ; ++c) {
                    if (! free(v, c))
                        continue;
                    assign(v, c);
                    search(std::max(used, c), lower_bound, best_k, best);
                    unassign(v);
                    if (best_k <= lower_bound)
                        return;
                }
            }

            auto colours() const -> const std::vector<Color> & { return _colour; }
            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            const Graph & _g;
            std::vector<Color> _colour;
            std::vector<std::vector<int>> _neighbour_colours;
            std::vector<int> _saturation;
            int _coloured = 0;
            std::uint64_t _nodes = 0, _max_nodes;
    };
}

auto sncolor::greedy_clique(const Graph & g) -> std::vector<Vertex>
{
    auto order = by_degree(g);
    std::vector<Vertex> best;
    std::size_t starts = std::min<std::size_t>(order.size(), 64);
    for (std::size_t s = 0 ; s < starts ; ++s) {
        std::vector<Vertex> clique{ order[s] };
        for (auto v : order) {
            if (v == order[s])
                continue;
            if (std::all_of(clique.begin(), clique.end(), [&] (Vertex u) { return g.adjacent(u, v); }))
                clique.push_back(v);
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    return best;
}

auto sncolor::chromatic_number(const Graph & g, std::uint64_t max_nodes) -> ChromaticResult
{
    ChromaticResult result;
    if (g.order() == 0) {
        result.coloring = PartialColoring(0, 0);
        return result;
    }

    result.clique = greedy_clique(g);
    int lower_bound = static_cast<int>(result.clique.size());

    int max_degree = 0;
    for (Vertex v = 0 ; v < g.order() ; ++v)
        max_degree = std::max(max_degree, g.degree(v));

    Dsatur greedy(g, max_degree + 1, 0);
    int best_k = greedy.greedy();
    auto best = greedy.colours();

    if (best_k > lower_bound) {
        Dsatur bnb(g, best_k, max_nodes);
        Color c = 0;
        for (auto v : result.clique)
            bnb.assign(v, ++c);
        bnb.search(lower_bound, lower_bound, best_k, best);
        result.nodes = bnb.nodes();
    }

    result.chromatic_number = best_k;
    result.coloring = PartialColoring(g.order(), best_k);
    for (Vertex v = 0 ; v < g.order() ; ++v)
        result.coloring.assign(v, best[v]);
    return result;
}
