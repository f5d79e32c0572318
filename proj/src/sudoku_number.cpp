#include <sncolor/sudoku_number.hpp>
#include <sncolor/chromatic.hpp>
#include <sncolor/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

using namespace sncolor;

namespace
{
    using Clock = std::chrono::steady_clock;

    constexpr std::size_t subsets_per_block = 64;

    struct SubsetOutcome
    {
        PruneReason pruned = PruneReason::None;
        std::uint64_t colorings = 0;
        std::uint64_t nodes = 0;
        std::optional<PartialColoring> success;
    };

    auto first_combination(int size) -> std::vector<Vertex>
    {
        std::vector<Vertex> c(size);
        std::iota(c.begin(), c.end(), 0);
        return c;
    }

    /// Lexicographic successor among size-|c| subsets of 0..n-1.
    auto next_combination(std::vector<Vertex> & c, int n) -> bool
    {
        int s = static_cast<int>(c.size());
        int i = s - 1;
        while (i >= 0 && c[i] == n - s + i)
            --i;
        if (i < 0)
            return false;
        ++c[i];
        for (int j = i + 1 ; j < s ; ++j)
            c[j] = c[j - 1] + 1;
        return true;
    }

    auto examine(const Graph & g, const ExtensionEngine & engine, const std::vector<Vertex> & subset, int k, bool prune)
        -> SubsetOutcome
    {
        SubsetOutcome out;
        if (prune) {
            out.pruned = prune_reason(g, subset, k);
            if (out.pruned != PruneReason::None)
                return out;
        }

        for_each_canonical_coloring(g, subset, k, [&] (const PartialColoring & c) {
            ++out.colorings;
            auto outcome = engine.count_extensions(c, 2);
            out.nodes += outcome.nodes;
            if (outcome.kind == ExtensionKind::Unique) {
                out.success = c;
                return false;
            }
            return true;
        });
        return out;
    }

    auto elapsed_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
}

auto sncolor::certificate_to_json(const Certificate & cert) -> Json
{
    auto colouring = coloring_to_json(cert.partial);
    return Json{
        { "graph", graph_to_json(cert.graph) },
        { "k", colouring["k"] },
        { "colors", colouring["colors"] },
        { "claimed_sn", cert.claimed_sn },
        { "provenance", cert.provenance }
    };
}

auto sncolor::certificate_from_json(const Json & j) -> Certificate
{
    if (! j.is_object() || ! j.contains("graph") || ! j.contains("claimed_sn"))
        throw ParseError("certificate JSON needs \"graph\", \"k\", \"colors\" and \"claimed_sn\"", 1, 1, 0);

    Certificate cert;
    cert.graph = graph_from_json(j["graph"]);
    cert.partial = coloring_from_json(Json{ { "k", j.value("k", Json()) }, { "colors", j.value("colors", Json()) } },
            cert.graph.order());
    if (! j["claimed_sn"].is_number_integer())
        throw ParseError("claimed_sn must be an integer", 1, 1, 0);
    cert.claimed_sn = j["claimed_sn"].get<int>();
    cert.provenance = j.value("provenance", "");
    return cert;
}

auto sncolor::report_to_json(const SearchReport & report) -> Json
{
    return Json{
        { "sn", report.sn },
        { "chromatic_number", report.chromatic_number },
        { "lower_bound", report.lower_bound },
        { "certificate", certificate_to_json(report.certificate) },
        { "subsets_examined", report.subsets_examined },
        { "colorings_examined", report.colorings_examined },
        { "extension_nodes", report.extension_nodes },
        { "pruned_by", { { "pendant", report.pruned_by.pendant }, { "uncolored_edge", report.pruned_by.uncolored_edge } } }
    };
}

auto sncolor::prune_reason(const Graph & g, std::span<const Vertex> subset, int k) -> PruneReason
{
    if (k < 3)
        return PruneReason::None;

    std::vector<bool> in_s(g.order(), false);
    for (auto v : subset)
        in_s[v] = true;

    for (Vertex v = 0 ; v < g.order() ; ++v)
        if (! in_s[v] && g.degree(v) == 1)
            return PruneReason::Pendant;

    for (auto [x, y] : g.edges())
        if (! in_s[x] && ! in_s[y] && g.degree(x) <= k - 1 && g.degree(y) <= k - 1)
            return PruneReason::UncoloredEdge;

    return PruneReason::None;
}

auto sncolor::prune_subset(const Graph & g, std::span<const Vertex> subset, int k) -> bool
{
    return prune_reason(g, subset, k) != PruneReason::None;
}

auto sncolor::for_each_canonical_coloring(const Graph & g, std::span<const Vertex> subset, int k,
        const std::function<bool (const PartialColoring &)> & visit) -> void
{
    std::vector<Vertex> order(subset.begin(), subset.end());
    std::sort(order.begin(), order.end());
    int size = static_cast<int>(order.size());
    int needed = (k >= 3 && size >= k - 1) ? k - 1 : 0;

    PartialColoring c(g.order(), k);
    bool stopped = false;

    auto extend = [&] (auto & self, int depth, int used) -> void {
        if (stopped)
            return;
        if (used + (size - depth) < needed)
            return;
        if (depth == size) {
            if (! visit(c))
                stopped = true;
            return;
        }
        auto v = order[depth];
        for (Color colour = 1 ; colour <= std::min(used + 1, k) && ! stopped ; ++colour) {
            auto nbrs = g.neighbours(v);
            if (std::any_of(nbrs.begin(), nbrs.end(), [&] (Vertex w) { return c[w] == colour; }))
                continue;
            c.assign(v, colour);
            self(self, depth + 1, std::max(used, colour));
            c.clear(v);
        }
    };
    extend(extend, 0, 0);
}

auto sncolor::canonical_colorings(const Graph & g, std::span<const Vertex> subset, int k) -> std::vector<PartialColoring>
{
    std::vector<PartialColoring> result;
    for_each_canonical_coloring(g, subset, k, [&] (const PartialColoring & c) {
        result.push_back(c);
        return true;
    });
    return result;
}

auto sncolor::sn_lower_bound(int chromatic_number) -> int
{
    return chromatic_number <= 2 ? 1 : chromatic_number - 1;
}

auto sncolor::sn_exact(const Graph & g, const SearchLimits & limits) -> SearchReport
{
    auto start = Clock::now();
    if (g.order() == 0 || ! g.connected())
        throw Error(ErrorCode::DisconnectedGraph, "the Sudoku number search needs a nonempty connected graph");

    SearchReport report;
    auto chromatic = chromatic_number(g, limits.max_nodes);
    int k = chromatic.chromatic_number;
    report.chromatic_number = k;
    report.lower_bound = sn_lower_bound(k);

    ExtensionEngine engine(g, k);
    unsigned workers = std::max(1u, limits.workers);
    int n = g.order();

    for (int s = report.lower_bound ; s <= n ; ++s) {
        auto subset = first_combination(s);
        bool more = true;
        while (more) {
            std::vector<std::vector<Vertex>> block;
            while (more && block.size() < subsets_per_block) {
                if (limits.max_subsets != 0 && report.subsets_examined + block.size() >= limits.max_subsets)
                    break;
                block.push_back(subset);
                more = next_combination(subset, n);
            }
            if (block.empty())
                throw BudgetExceeded("subset budget of " + std::to_string(limits.max_subsets) + " exhausted", s);

            std::vector<SubsetOutcome> outcomes(block.size());
            auto run = [&] (unsigned worker) {
                for (std::size_t i = worker ; i < block.size() ; i += workers)
                    outcomes[i] = examine(g, engine, block[i], k, limits.prune);
            };
            if (workers == 1 || block.size() == 1)
                run(0);
            else {
                std::vector<std::jthread> pool;
                for (unsigned w = 0 ; w < workers ; ++w)
                    pool.emplace_back(run, w);
            }

            for (std::size_t i = 0 ; i < block.size() ; ++i) {
                auto & o = outcomes[i];
                ++report.subsets_examined;
                report.colorings_examined += o.colorings;
                report.extension_nodes += o.nodes;
                if (o.pruned == PruneReason::Pendant)
                    ++report.pruned_by.pendant;
                else if (o.pruned == PruneReason::UncoloredEdge)
                    ++report.pruned_by.uncolored_edge;

                if (o.success) {
                    report.sn = s;
                    report.certificate = Certificate{ g, *o.success, s, "exact-search" };
                    report.elapsed = Clock::now() - start;
                    return report;
                }
            }

            if (limits.max_nodes != 0 && report.extension_nodes > limits.max_nodes)
                throw BudgetExceeded("extension node budget of " + std::to_string(limits.max_nodes) + " exhausted", s);
            if (limits.max_seconds > 0 && elapsed_since(start) > limits.max_seconds)
                throw BudgetExceeded("time budget exhausted", s);
        }
    }

    // unreachable for a valid graph: colouring every vertex is always a Sudoku colouring
    throw Error(ErrorCode::BudgetExceeded, "no Sudoku colouring found");
}

auto sncolor::verify_certificate(const Certificate & cert, bool exact, const SearchLimits & limits) -> VerificationReport
{
    VerificationReport report;
    auto fail = [&] (std::string why) {
        report.ok = false;
        report.reasons.push_back(std::move(why));
    };

    const auto & g = cert.graph;
    const auto & c = cert.partial;
    if (c.vertex_count() != g.order()) {
        fail("colouring covers " + std::to_string(c.vertex_count()) + " vertices, graph has " + std::to_string(g.order()));
        return report;
    }

    int chi = chromatic_number(g, limits.max_nodes).chromatic_number;
    if (c.k() != chi)
        fail("k = " + std::to_string(c.k()) + " but the chromatic number is " + std::to_string(chi));

    bool proper = is_proper(g, c);
    if (! proper)
        fail("partial colouring is not proper");

    if (c.domain_size() != cert.claimed_sn)
        fail("colours " + std::to_string(c.domain_size()) + " vertices but claims sn = " + std::to_string(cert.claimed_sn));

    if (proper && c.k() >= 1 && c.k() <= max_colors) {
        auto outcome = count_extensions(g, c, 2);
        if (outcome.kind != ExtensionKind::Unique)
            fail("extension is " + std::string(to_string(outcome.kind)) + ", not unique");
    }

    if (exact) {
        auto search = sn_exact(g, limits);
        report.exact_sn = search.sn;
        if (search.sn != cert.claimed_sn)
            fail("exact search gives sn = " + std::to_string(search.sn) + ", certificate claims " + std::to_string(cert.claimed_sn));
    }
    return report;
}

namespace
{
    using Rows = std::vector<std::uint32_t>;

    auto rows_of(const Graph & g) -> Rows
    {
        Rows rows(g.order(), 0);
        for (auto [u, v] : g.edges()) {
            rows[u] |= 1u << v;
            rows[v] |= 1u << u;
        }
        return rows;
    }

    auto rows_connected(const Rows & rows) -> bool
    {
        int n = static_cast<int>(rows.size());
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0 ; v < n ; ++v)
                if (frontier >> v & 1)
                    next |= rows[v];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n == 32 ? ~0u : (1u << n) - 1);
    }

    /// Degree sequence plus, per vertex, the sum of neighbour degrees.
    auto invariant(const Rows & rows) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> key;
        for (auto r : rows) {
            int sum = 0;
            for (std::size_t w = 0 ; w < rows.size() ; ++w)
                if (r >> w & 1)
                    sum += std::popcount(rows[w]);
            key.emplace_back(std::popcount(r), sum);
        }
        std::sort(key.begin(), key.end());
        return key;
    }

    auto rows_isomorphic(const Rows & a, const Rows & b) -> bool
    {
        int n = static_cast<int>(a.size());
        if (static_cast<int>(b.size()) != n)
            return false;
        std::vector<int> map(n, -1);
        std::uint32_t taken = 0;

        auto extend = [&] (auto & self, int v) -> bool {
            if (v == n)
                return true;
            for (int w = 0 ; w < n ; ++w) {
                if (taken >> w & 1 || std::popcount(a[v]) != std::popcount(b[w]))
                    continue;
                bool consistent = true;
                for (int u = 0 ; u < v && consistent ; ++u)
                    consistent = ((a[v] >> u & 1) == (b[w] >> map[u] & 1));
                if (! consistent)
                    continue;
                map[v] = w;
                taken |= 1u << w;
                if (self(self, v + 1))
                    return true;
                taken &= ~(1u << w);
            }
            return false;
        };
        return extend(extend, 0);
    }
}

auto sncolor::isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    if (a.order() > 32)
        throw Error(ErrorCode::GraphTooLarge, "brute-force isomorphism limited to 32 vertices");
    auto ra = rows_of(a), rb = rows_of(b);
    return invariant(ra) == invariant(rb) && rows_isomorphic(ra, rb);
}

auto sncolor::connected_graphs(int n) -> std::vector<Graph>
{
    if (n < 1 || n > 7)
        throw Error(ErrorCode::GraphTooLarge, "connected graph enumeration supports 1..7 vertices");

    std::vector<Edge> pairs;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            pairs.emplace_back(u, v);

    std::map<std::vector<std::pair<int, int>>, std::vector<Rows>> buckets;
    std::vector<Rows> classes;
    std::uint32_t masks = 1u << pairs.size();
    for (std::uint32_t mask = 0 ; mask < masks ; ++mask) {
        Rows rows(n, 0);
        for (std::size_t e = 0 ; e < pairs.size() ; ++e)
            if (mask >> e & 1) {
                rows[pairs[e].first] |= 1u << pairs[e].second;
                rows[pairs[e].second] |= 1u << pairs[e].first;
            }
        if (! rows_connected(rows))
            continue;

        auto & bucket = buckets[invariant(rows)];
        if (std::none_of(bucket.begin(), bucket.end(), [&] (const Rows & r) { return rows_isomorphic(r, rows); })) {
            bucket.push_back(rows);
            classes.push_back(rows);
        }
    }

    std::vector<Graph> result;
    for (auto & rows : classes) {
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (rows[u] >> v & 1)
                    edges.emplace_back(u, v);
        result.push_back(Graph::build(n, edges));
    }
    return result;
}

auto ScanReport::counterexample_count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto & level : levels)
        total += level.counterexamples.size();
    return total;
}

auto sncolor::conjecture_scan(int max_n, const SearchLimits & limits) -> ScanReport
{
    if (max_n > 7)
        throw BudgetExceeded("conjecture scan is limited to max_n <= 7");

    ScanReport report;
    report.max_n = max_n;
    for (int n = 2 ; n <= max_n ; ++n) {
        ScanLevel level;
        level.n = n;
        for (auto & g : connected_graphs(n)) {
            ++level.connected_graphs;
            auto search = sn_exact(g, limits);
            ScanEntry entry{ g, search.sn, g.size() == static_cast<std::size_t>(n * (n - 1) / 2), n == 2 };

            bool extremal = (search.sn == n - 1);
            if (extremal)
                level.extremal.push_back(entry);
            if (! entry.degenerate_bipartite && extremal != entry.complete)
                level.counterexamples.push_back(entry);
        }
        report.levels.push_back(std::move(level));
    }
    return report;
}

auto sncolor::scan_report_to_json(const ScanReport & report) -> Json
{
    auto entries = [] (const std::vector<ScanEntry> & list) {
        Json out = Json::array();
        for (auto & e : list)
            out.push_back({ { "graph", graph_to_json(e.graph) }, { "sn", e.sn }, { "complete", e.complete },
                    { "degenerate_bipartite", e.degenerate_bipartite } });
        return out;
    };

    Json levels = Json::array();
    for (auto & level : report.levels)
        levels.push_back({ { "n", level.n }, { "connected_graphs", level.connected_graphs },
                { "extremal", entries(level.extremal) }, { "counterexamples", entries(level.counterexamples) } });

    return Json{ { "max_n", report.max_n }, { "counterexamples", report.counterexample_count() }, { "levels", std::move(levels) } };
}
