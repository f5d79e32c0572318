#include <sncolor/extension.hpp>
#include <sncolor/chromatic.hpp>
#include <sncolor/error.hpp>

#include <algorithm>
#include <string>

using namespace sncolor;

namespace
{
    struct State
    {
        std::vector<Color> color;
        std::vector<ColorSet> lists;
        ColorSet used;
        int uncolored = 0;
    };

    /// Shared machinery for extension counting and list colouring counts.
    class Search
    {
        public:
            Search(const Graph & g, int k, const std::vector<bool> & attractive, std::uint64_t max_nodes) :
                _g(g),
                _k(k),
                _attractive(attractive),
                _max_nodes(max_nodes)
            {
            }

            /// False if a neighbour's list empties.
            auto assign(State & s, Vertex v, Color c) const -> bool
            {
                s.color[v] = c;
                s.lists[v] = ColorSet{};
                s.used.insert(c);
                --s.uncolored;
                bool alive = true;
                for (auto w : _g.neighbours(v))
                    if (s.color[w] == no_color) {
                        s.lists[w].erase(c);
                        if (s.lists[w].empty())
                            alive = false;
                    }
                return alive;
            }

            auto classify(const State & s, Color c) const -> Rule
            {
                int used = s.used.size();
                if (used == _k)
                    return Rule::NearColorDominating;
                if (used == _k - 1 && ! s.used.contains(c))
                    return Rule::ColorDominating;
                return Rule::ListSingleton;
            }

            auto find_attractive(const State & s, Vertex & vertex, Color & colour) const -> bool
            {
                if (_attractive.empty())
                    return false;
                for (Vertex w = 0 ; w < _g.order() ; ++w) {
                    if (s.color[w] != no_color || ! _attractive[w])
                        continue;
                    bool found = false;
                    s.lists[w].for_each([&] (Color i) {
                        if (found)
                            return;
                        auto nbrs = _g.neighbours(w);
                        bool nobody_else = std::none_of(nbrs.begin(), nbrs.end(), [&] (Vertex v) {
                            return s.color[v] == no_color && s.lists[v].contains(i);
                        });
                        if (nobody_else) {
                            found = true;
                            colour = i;
                        }
                    });
                    if (found) {
                        vertex = w;
                        return true;
                    }
                }
                return false;
            }

            auto propagate(State & s, std::vector<Deduction> * trace) const -> PropagationStatus
            {
                for (Vertex v = 0 ; v < _g.order() ; ++v)
                    if (s.color[v] == no_color && s.lists[v].empty())
                        return PropagationStatus::DeadEnd;

                bool progress = false;
                while (s.uncolored > 0) {
                    Vertex v = -1;
                    Color c = no_color;
                    Rule rule = Rule::ListSingleton;

                    for (Vertex w = 0 ; w < _g.order() ; ++w)
                        if (s.color[w] == no_color && s.lists[w].size() == 1) {
                            v = w;
                            c = s.lists[w].first();
                            rule = classify(s, c);
                            break;
                        }

                    if (v == -1) {
                        if (! find_attractive(s, v, c))
                            break;
                        rule = Rule::Attractive;
                    }

                    progress = true;
                    if (trace)
                        trace->push_back({ v, c, rule });
                    if (! assign(s, v, c))
                        return PropagationStatus::DeadEnd;
                }

                if (progress || s.uncolored == 0)
                    return PropagationStatus::Progress;
                return PropagationStatus::Stuck;
            }

            auto most_constrained(const State & s) const -> Vertex
            {
                Vertex best = -1;
                for (Vertex v = 0 ; v < _g.order() ; ++v)
                    if (s.color[v] == no_color && (best == -1 || s.lists[v].size() < s.lists[best].size()))
                        best = v;
                return best;
            }

            struct Tally
            {
                std::uint64_t count = 0;
                std::vector<Color> first, second;
                std::vector<Deduction> first_trace;
            };

            auto count(State s, std::vector<Deduction> trace, std::uint64_t cap, Tally & tally, bool keep) -> void
            {
                if (_max_nodes != 0 && _nodes >= _max_nodes)
                    throw BudgetExceeded("extension search exceeded " + std::to_string(_max_nodes) + " nodes");
                ++_nodes;

                if (propagate(s, keep ? &trace : nullptr) == PropagationStatus::DeadEnd)
                    return;

                if (s.uncolored == 0) {
                    ++tally.count;
                    if (keep && tally.count == 1) {
                        tally.first = s.color;
                        tally.first_trace = std::move(trace);
                    }
                    else if (keep && tally.count == 2)
                        tally.second = s.color;
                    return;
                }

                auto v = most_constrained(s);
                auto candidates = s.lists[v];
                bool stop = false;
                candidates.for_each([&] (Color c) {
                    if (stop)
                        return;
                    State child = s;
                    if (assign(child, v, c)) {
                        auto child_trace = trace;
                        if (keep)
                            child_trace.push_back({ v, c, Rule::Branch });
                        count(std::move(child), std::move(child_trace), cap, tally, keep);
                    }
                    stop = tally.count >= cap;
                });
            }

            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            const Graph & _g;
            int _k;
            const std::vector<bool> & _attractive;
            std::uint64_t _max_nodes;
            std::uint64_t _nodes = 0;
    };

    auto check_k(int k) -> void
    {
        if (k < 1 || k > max_colors)
            throw Error(ErrorCode::InvalidColoring, "k = " + std::to_string(k) + " outside 1.." + std::to_string(max_colors));
    }

    /// Nullopt when the colouring is improper or leaves a vertex without candidates.
    auto initial_state(const Graph & g, const PartialColoring & c) -> std::optional<State>
    {
        if (! is_proper(g, c))
            return std::nullopt;
        State s;
        s.color = c.colors();
        s.lists = color_lists(g, c);
        s.used = c.used_colors();
        s.uncolored = g.order() - c.domain_size();
        return s;
    }

    auto to_coloring(const std::vector<Color> & colours, int k) -> PartialColoring
    {
        PartialColoring c(static_cast<int>(colours.size()), k);
        for (Vertex v = 0 ; v < static_cast<Vertex>(colours.size()) ; ++v)
            c.assign(v, colours[v]);
        return c;
    }
}

auto sncolor::to_string(Rule rule) -> std::string_view
{
    switch (rule) {
        case Rule::ColorDominating:     return "color-dominating";
        case Rule::NearColorDominating: return "near-color-dominating";
        case Rule::Attractive:          return "attractive";
        case Rule::ListSingleton:       return "list-singleton";
        case Rule::Branch:              return "branch";
    }
    return "unknown";
}

auto sncolor::to_string(PropagationStatus status) -> std::string_view
{
    switch (status) {
        case PropagationStatus::Progress: return "progress";
        case PropagationStatus::Stuck:    return "stuck";
        case PropagationStatus::DeadEnd:  return "dead-end";
    }
    return "unknown";
}

auto sncolor::to_string(ExtensionKind kind) -> std::string_view
{
    switch (kind) {
        case ExtensionKind::NotExtendable: return "not-extendable";
        case ExtensionKind::Unique:        return "unique";
        case ExtensionKind::Multiple:      return "multiple";
    }
    return "unknown";
}

ExtensionEngine::ExtensionEngine(const Graph & g, int k, EngineOptions options) :
    _g(g),
    _k(k),
    _options(options)
{
    check_k(k);
    if (! _options.use_attractive)
        return;

    // chi(N[w]) = k  <=>  chi(N(w)) = k - 1, since w sees all of N(w)
    _k_chromatic_neighbourhood.assign(g.order(), false);
    for (Vertex w = 0 ; w < g.order() ; ++w) {
        auto nbrs = g.neighbours(w);
        if (static_cast<int>(nbrs.size()) + 1 > _options.attractive_threshold || static_cast<int>(nbrs.size()) < k - 1)
            continue;
        auto local = g.induced(nbrs);
        _k_chromatic_neighbourhood[w] = (chromatic_number(local).chromatic_number == k - 1);
    }
}

auto ExtensionEngine::propagate(const PartialColoring & c) const -> PropagationResult
{
    if (c.vertex_count() != _g.order() || c.k() != _k)
        throw Error(ErrorCode::InvalidColoring, "colouring does not match the engine's graph and k");

    auto state = initial_state(_g, c);
    if (! state)
        return { c, {}, PropagationStatus::DeadEnd };

    Search search(_g, _k, _k_chromatic_neighbourhood, _options.max_nodes);
    std::vector<Deduction> trace;
    auto status = search.propagate(*state, &trace);

    PartialColoring out(_g.order(), _k);
    for (Vertex v = 0 ; v < _g.order() ; ++v)
        out.assign(v, state->color[v]);
    return { std::move(out), std::move(trace), status };
}

auto ExtensionEngine::count_extensions(const PartialColoring & c, std::uint64_t cap) const -> ExtensionOutcome
{
    if (c.vertex_count() != _g.order() || c.k() != _k)
        throw Error(ErrorCode::InvalidColoring, "colouring does not match the engine's graph and k");
    cap = std::max<std::uint64_t>(cap, 2);

    ExtensionOutcome outcome;
    auto state = initial_state(_g, c);
    if (! state)
        return outcome;

    Search search(_g, _k, _k_chromatic_neighbourhood, _options.max_nodes);
    Search::Tally tally;
    search.count(std::move(*state), {}, cap, tally, true);

    outcome.count = tally.count;
    outcome.nodes = search.nodes();
    if (tally.count >= 1)
        outcome.witness1 = to_coloring(tally.first, _k);
    if (tally.count == 1) {
        outcome.kind = ExtensionKind::Unique;
        outcome.trace = std::move(tally.first_trace);
    }
    else if (tally.count >= 2) {
        outcome.kind = ExtensionKind::Multiple;
        outcome.witness2 = to_coloring(tally.second, _k);
    }
    return outcome;
}

auto ExtensionEngine::is_extendable(const PartialColoring & c) const -> bool
{
    return count_extensions(c, 2).kind != ExtensionKind::NotExtendable;
}

auto ExtensionEngine::is_sudoku_coloring(const PartialColoring & c) const -> bool
{
    return count_extensions(c, 2).kind == ExtensionKind::Unique;
}

auto sncolor::propagate(const Graph & g, const PartialColoring & c) -> PropagationResult
{
    return ExtensionEngine(g, c.k()).propagate(c);
}

auto sncolor::count_extensions(const Graph & g, const PartialColoring & c, std::uint64_t cap) -> ExtensionOutcome
{
    return ExtensionEngine(g, c.k()).count_extensions(c, cap);
}

auto sncolor::is_extendable(const Graph & g, const PartialColoring & c) -> bool
{
    return ExtensionEngine(g, c.k()).is_extendable(c);
}

auto sncolor::is_sudoku_coloring(const Graph & g, const PartialColoring & c) -> bool
{
    return ExtensionEngine(g, c.k()).is_sudoku_coloring(c);
}

namespace
{
    /// Counts colour partitions of g into at most k classes, stopping at two.
    class PartitionCounter
    {
        public:
            PartitionCounter(const Graph & g, int k, std::uint64_t max_nodes) :
                _g(g), _k(k), _max_nodes(max_nodes), _colour(g.order(), no_color)
            {
                // breadth-first order so neighbours are coloured early
                std::vector<bool> seen(g.order(), false);
                for (Vertex root = 0 ; root < g.order() ; ++root) {
                    if (seen[root])
                        continue;
                    seen[root] = true;
                    std::size_t head = _order.size();
                    _order.push_back(root);
                    while (head < _order.size()) {
                        auto v = _order[head++];
                        for (auto w : g.neighbours(v))
                            if (! seen[w]) {
                                seen[w] = true;
                                _order.push_back(w);
                            }
                    }
                }
            }

            auto run() -> void { extend(0, 0); }

            std::uint64_t partitions = 0;
            int blocks_of_first = 0;

        private:
            auto extend(std::size_t depth, int used) -> void
            {
                if (_max_nodes != 0 && _nodes >= _max_nodes)
                    throw BudgetExceeded("unique-colourability search exceeded " + std::to_string(_max_nodes) + " nodes");
                ++_nodes;

                if (depth == _order.size()) {
                    if (++partitions == 1)
                        blocks_of_first = used;
                    return;
                }
                auto v = _order[depth];
                for (Color c = 1 ; c <= std::min(used + 1, _k) && partitions < 2 ; ++c) {
                    auto nbrs = _g.neighbours(v);
                    if (std::any_of(nbrs.begin(), nbrs.end(), [&] (Vertex w) { return _colour[w] == c; }))
                        continue;
                    _colour[v] = c;
                    extend(depth + 1, std::max(used, c));
                    _colour[v] = no_color;
                }
            }

            const Graph & _g;
            int _k;
            std::uint64_t _max_nodes, _nodes = 0;
            std::vector<Color> _colour;
            std::vector<Vertex> _order;
    };
}

auto sncolor::is_uniquely_colorable(const Graph & g, int k, std::uint64_t max_nodes) -> bool
{
    if (k < 1)
        return false;
    PartitionCounter counter(g, k, max_nodes);
    counter.run();
    // A partition into j classes yields k!/(k-j)! labelled colourings, which
    // equals k! exactly when j is k or k-1.
    return counter.partitions == 1 && counter.blocks_of_first >= k - 1;
}

auto sncolor::count_list_colorings(const Graph & g, const ColorListState & lists, std::uint64_t cap, std::uint64_t max_nodes)
    -> std::uint64_t
{
    if (static_cast<int>(lists.size()) != g.order())
        throw Error(ErrorCode::InvalidColoring, "one colour list per vertex required");

    int k = 1;
    for (auto l : lists)
        if (! l.empty())
            k = std::max(k, 64 - std::countl_zero(l.bits()));

    State s;
    s.color.assign(g.order(), no_color);
    s.lists = lists;
    s.uncolored = g.order();

    std::vector<bool> no_attractive;
    Search search(g, k, no_attractive, max_nodes);
    Search::Tally tally;
    search.count(std::move(s), {}, std::max<std::uint64_t>(cap, 1), tally, false);
    return tally.count;
}
