#include <sncolor/theorems.hpp>
#include <sncolor/error.hpp>

#include <array>

using namespace sncolor;

namespace
{
    constexpr std::array case_names{
        std::pair{ TheoremCase::Bipartite, "bipartite" },
        std::pair{ TheoremCase::CompleteMultipartite, "complete-multipartite" },
        std::pair{ TheoremCase::OddCycle, "odd-cycle" },
        std::pair{ TheoremCase::Amalgam, "amalgam" },
        std::pair{ TheoremCase::Friendship, "friendship" },
        std::pair{ TheoremCase::Tadpole, "tadpole" },
        std::pair{ TheoremCase::Lollipop, "lollipop" },
        std::pair{ TheoremCase::CycleOfCliques, "cycle-of-cliques" },
        std::pair{ TheoremCase::CycleOfCliquesMinus, "cycle-of-cliques-minus" },
        std::pair{ TheoremCase::StackedTriangulation, "stacked-triangulation" },
        std::pair{ TheoremCase::Fan, "fan" },
        std::pair{ TheoremCase::Wheel, "wheel" }
    };

    [[noreturn]] auto reject(TheoremCase c, const FamilySpec & spec, const std::string & why) -> void
    {
        throw Error(ErrorCode::InvalidFamilyParams, std::string(to_string(c)) + " on " + spec.describe() + ": " + why);
    }

    auto expect_family(TheoremCase c, const FamilySpec & spec, Family family) -> void
    {
        if (spec.family != family)
            reject(c, spec, "expects a " + std::string(to_string(family)) + " spec");
        validate(spec);
    }

    /// Number of parts of a complete multipartite spec (Complete counts as all singletons).
    auto part_count(TheoremCase c, const FamilySpec & spec) -> int
    {
        validate(spec);
        if (spec.family == Family::Complete)
            return spec.n;
        if (spec.family == Family::CompleteMultipartite)
            return static_cast<int>(spec.parts.size());
        reject(c, spec, "expects a complete or complete-multipartite spec");
    }

    // Vertex numbering shared with generate().
    auto rim(int j) -> Vertex { return j - 1; }                                   // v_j, x_j, 1-based
    auto tail(int n, int j) -> Vertex { return j == 1 ? 0 : n + j - 2; }          // u_j of tadpole / lollipop
    auto block_vertex(int n, int m, int i, int j) -> Vertex { return 2 * n + (i - 1) * (m - 2) + (j - 1); }   // y_{i,j}

    auto make(const FamilySpec & spec, int k) -> std::pair<Graph, PartialColoring>
    {
        auto g = generate(spec);
        return { g, PartialColoring(g.order(), k) };
    }

    auto bipartite_certificate(TheoremCase c, const FamilySpec & spec) -> std::pair<Graph, PartialColoring>
    {
        auto g = generate(spec);
        if (! g.connected() || ! g.bipartite())
            reject(c, spec, "graph is not connected and bipartite");
        PartialColoring colouring(g.order(), g.size() == 0 ? 1 : 2);
        colouring.assign(0, 1);
        return { g, colouring };
    }

    /// u_i from part i gets colour i, for parts 1..t-1; parts are consecutive blocks.
    auto multipartite_certificate(const Graph & g, const std::vector<int> & parts) -> PartialColoring
    {
        PartialColoring colouring(g.order(), static_cast<int>(parts.size()));
        Vertex first = 0;
        for (std::size_t i = 0 ; i + 1 < parts.size() ; ++i) {
            colouring.assign(first, static_cast<Color>(i + 1));
            first += parts[i];
        }
        return colouring;
    }
}

auto sncolor::to_string(TheoremCase c) -> std::string_view
{
    for (auto & [t, name] : case_names)
        if (t == c)
            return name;
    return "unknown";
}

auto sncolor::theorem_case_from_string(std::string_view name) -> std::optional<TheoremCase>
{
    for (auto & [t, n] : case_names)
        if (n == name)
            return t;
    return std::nullopt;
}

auto sncolor::all_theorem_cases() -> std::vector<TheoremCase>
{
    std::vector<TheoremCase> result;
    for (auto & [t, name] : case_names)
        result.push_back(t);
    return result;
}

auto sncolor::sn_formula(TheoremCase c, const FamilySpec & s) -> int
{
    switch (c) {
        case TheoremCase::Bipartite: {
            auto g = generate(s);
            if (! g.connected() || ! g.bipartite())
                reject(c, s, "graph is not connected and bipartite");
            return 1;
        }

        case TheoremCase::CompleteMultipartite: {
            int t = part_count(c, s);
            if (t < 3)
                reject(c, s, "needs at least 3 parts");
            return t - 1;
        }

        case TheoremCase::OddCycle:
            expect_family(c, s, Family::Cycle);
            if (s.n % 2 == 0)
                reject(c, s, "cycle length must be odd");
            return (s.n + 1) / 2;

        case TheoremCase::Amalgam:
            expect_family(c, s, Family::Amalgam);
            return s.m * (s.n - s.r - 1) + s.r - 1;

        case TheoremCase::Friendship:
            expect_family(c, s, Family::Friendship);
            return s.m;

        case TheoremCase::Tadpole:
            expect_family(c, s, Family::Tadpole);
            return s.n % 2 == 0 ? 1 : (s.n + s.m) / 2;

        case TheoremCase::Lollipop:
            expect_family(c, s, Family::Lollipop);
            return s.n + s.m - 3;

        case TheoremCase::CycleOfCliques:
            expect_family(c, s, Family::CycleOfCliques);
            return s.n * (s.m - 2);

        case TheoremCase::CycleOfCliquesMinus:
            expect_family(c, s, Family::CycleOfCliquesMinus);
            return (s.m - 3) * s.n + 1;

        case TheoremCase::StackedTriangulation:
            expect_family(c, s, Family::StackedTriangulation);
            return 2;

        case TheoremCase::Fan:
            expect_family(c, s, Family::Fan);
            return 2;

        case TheoremCase::Wheel:
            expect_family(c, s, Family::Wheel);
            if (s.n % 2 == 0)
                return 2;
            return s.n == 3 ? 3 : (s.n + 1) / 2;
    }
    reject(c, s, "unknown case");
}

auto sncolor::construct(TheoremCase c, const FamilySpec & s) -> Certificate
{
    int claimed = sn_formula(c, s);
    Graph g;
    PartialColoring colouring;

    switch (c) {
        case TheoremCase::Bipartite:
            std::tie(g, colouring) = bipartite_certificate(c, s);
            break;

        case TheoremCase::CompleteMultipartite: {
            g = generate(s);
            auto parts = (s.family == Family::Complete) ? std::vector<int>(s.n, 1) : s.parts;
            colouring = multipartite_certificate(g, parts);
            break;
        }

        case TheoremCase::OddCycle: {
            int n = s.n;
            std::tie(g, colouring) = make(s, 3);
            if (n == 3) {
                colouring.assign(rim(1), 1);
                colouring.assign(rim(2), 2);
                break;
            }
            for (int j = 1 ; j <= n - 2 ; j += 2)
                colouring.assign(rim(j), j % 4 == 1 ? 1 : 2);
            colouring.assign(rim(n - 1), 3);
            break;
        }

        case TheoremCase::Amalgam:
        case TheoremCase::Friendship: {
            auto spec = (c == TheoremCase::Friendship) ? FamilySpec::amalgam(s.m, 3, 1) : s;
            int n = spec.n, m = spec.m, r = spec.r, block = n - r;
            std::tie(g, colouring) = make(s, n);

            // x_0 is the last core vertex and x_i the last vertex of copy i;
            // everything else is coloured. When n = r + 1 the copies have no
            // further vertices, so only the core is coloured.
            for (int v = 0 ; v < r - 1 ; ++v)
                colouring.assign(v, v + 1);
            for (int copy = 1 ; copy <= m ; ++copy) {
                Color first = (copy == 1) ? r + 1 : r + 2;
                for (int j = 0 ; j < block - 1 ; ++j)
                    colouring.assign(r + (copy - 1) * block + j, first + j);
            }
            break;
        }

        case TheoremCase::Tadpole: {
            if (s.n % 2 == 0) {
                std::tie(g, colouring) = bipartite_certificate(c, s);
                break;
            }
            int n = s.n, m = s.m;
            std::tie(g, colouring) = make(s, 3);
            for (int i = 2 ; i <= n - 1 ; i += 2)
                colouring.assign(rim(i), i % 4 == 2 ? 3 : 2);
            if (m % 2 == 0)
                for (int j = 2 ; j <= m ; j += 2)
                    colouring.assign(tail(n, j), j % 4 == 2 ? 2 : 3);
            else
                for (int j = 1 ; j <= m ; j += 2)
                    colouring.assign(tail(n, j), j % 4 == 1 ? 1 : 3);
            break;
        }

        case TheoremCase::Lollipop: {
            int n = s.n, m = s.m;
            std::tie(g, colouring) = make(s, n);
            for (int i = 3 ; i <= n ; ++i)
                colouring.assign(rim(i), i);
            for (int j = 2 ; j <= m ; ++j)
                colouring.assign(tail(n, j), j % 2 == 0 ? 2 : 1);
            break;
        }

        case TheoremCase::CycleOfCliques: {
            int n = s.n, m = s.m;
            std::tie(g, colouring) = make(s, m);
            // the first m-3 vertices of each H^i take 4..m
            for (int i = 1 ; i <= n ; ++i)
                for (int j = 1 ; j <= m - 3 ; ++j)
                    colouring.assign(block_vertex(n, m, i, j), j + 3);
            int last_pair = (n % 2 == 0) ? (n - 2) / 2 : (n - 3) / 2;
            for (int j = 0 ; j <= last_pair ; ++j) {
                colouring.assign(rim(4 * j + 1), 1);
                colouring.assign(rim(4 * j + 3), 2);
            }
            if (n % 2 == 1)
                colouring.assign(rim(2 * n - 1), 3);
            break;
        }

        case TheoremCase::CycleOfCliquesMinus: {
            int n = s.n, m = s.m;
            std::tie(g, colouring) = make(s, m - 1);
            int full_blocks = (n % 2 == 0) ? n : n - 1;
            for (int i = 1 ; i <= full_blocks ; ++i)
                for (int j = 2 ; j <= m - 2 ; ++j)
                    colouring.assign(block_vertex(n, m, i, j), j + 1);
            colouring.assign(block_vertex(n, m, 1, 1), 2);
            if (n % 2 == 1) {
                for (int j = 3 ; j <= m - 2 ; ++j)
                    colouring.assign(block_vertex(n, m, n, j), j + 1);
                colouring.assign(block_vertex(n, m, n, 2), 1);
            }
            break;
        }

        case TheoremCase::StackedTriangulation:
            // y = 0, z = 1
            std::tie(g, colouring) = make(s, 3);
            colouring.assign(0, 1);
            colouring.assign(1, 2);
            break;

        case TheoremCase::Fan:
            // the apex and v_1 play y and z of the first triangle
            std::tie(g, colouring) = make(s, 3);
            colouring.assign(s.n, 1);
            colouring.assign(rim(1), 2);
            break;

        case TheoremCase::Wheel: {
            int n = s.n;
            if (n == 3) {
                g = generate(s);
                colouring = multipartite_certificate(g, { 1, 1, 1, 1 });
                break;
            }
            if (n % 2 == 0) {
                std::tie(g, colouring) = make(s, 3);
                colouring.assign(n, 1);
                colouring.assign(rim(1), 2);
                break;
            }
            std::tie(g, colouring) = make(s, 4);
            for (int i = 1 ; i < n ; i += 2)
                colouring.assign(rim(i), i % 4 == 1 ? 2 : 3);
            colouring.assign(rim(n), 4);
            break;
        }
    }

    return Certificate{ std::move(g), std::move(colouring), claimed, "family-theorem:" + std::string(to_string(c)) };
}

auto sncolor::theorem_report_to_json(const TheoremReport & r) -> Json
{
    Json j{
        { "case", to_string(r.theorem) },
        { "spec", r.spec.describe() },
        { "ok", r.ok },
        { "certificate_size", r.certificate_size },
        { "formula", r.formula }
    };
    if (r.exact_sn)
        j["exact_sn"] = *r.exact_sn;
    j["reasons"] = r.reasons;
    return j;
}

auto sncolor::verify_theorem(TheoremCase c, const FamilySpec & spec, bool exact, const SearchLimits & limits) -> TheoremReport
{
    TheoremReport report{ .theorem = c, .spec = spec };
    report.formula = sn_formula(c, spec);

    auto cert = construct(c, spec);
    report.certificate_size = cert.partial.domain_size();
    if (report.certificate_size != report.formula) {
        report.ok = false;
        report.reasons.push_back("certificate colours " + std::to_string(report.certificate_size)
                + " vertices, formula gives " + std::to_string(report.formula));
    }

    auto check = verify_certificate(cert, exact, limits);
    report.ok = report.ok && check.ok;
    report.exact_sn = check.exact_sn;
    for (auto & why : check.reasons)
        report.reasons.push_back(why);
    return report;
}

auto sncolor::fast_grid() -> TheoremGrid
{
    TheoremGrid grid;
    for (int n = 5 ; n <= 101 ; n += 2)
        grid.emplace_back(TheoremCase::OddCycle, FamilySpec::cycle(n));
    for (int n = 3 ; n <= 9 ; ++n)
        for (int m = 2 ; m <= 6 ; ++m)
            grid.emplace_back(TheoremCase::Tadpole, FamilySpec::tadpole(n, m));
    for (int n = 2 ; n <= 6 ; ++n)
        for (int m = 3 ; m <= 6 ; ++m)
            grid.emplace_back(TheoremCase::CycleOfCliques, FamilySpec::cycle_of_cliques(n, m));
    for (int n = 2 ; n <= 6 ; ++n)
        for (int m = 4 ; m <= 6 ; ++m)
            grid.emplace_back(TheoremCase::CycleOfCliquesMinus, FamilySpec::cycle_of_cliques_minus(n, m));
    for (int n = 4 ; n <= 7 ; ++n)
        for (int m = 2 ; m <= 5 ; ++m)
            grid.emplace_back(TheoremCase::Lollipop, FamilySpec::lollipop(n, m));
    for (int m = 2 ; m <= 4 ; ++m)
        for (int n = 3 ; n <= 5 ; ++n)
            for (int r = 1 ; r < n ; ++r)
                grid.emplace_back(TheoremCase::Amalgam, FamilySpec::amalgam(m, n, r));
    for (int m = 2 ; m <= 6 ; ++m)
        grid.emplace_back(TheoremCase::Friendship, FamilySpec::friendship(m));
    for (int n = 3 ; n <= 12 ; ++n)
        grid.emplace_back(TheoremCase::Wheel, FamilySpec::wheel(n));
    for (int n = 2 ; n <= 10 ; ++n)
        grid.emplace_back(TheoremCase::Fan, FamilySpec::fan(n));
    grid.emplace_back(TheoremCase::StackedTriangulation, FamilySpec::stacked_triangulation({}));
    grid.emplace_back(TheoremCase::StackedTriangulation, FamilySpec::stacked_triangulation({ { 0, 1 }, { 0, 3 }, { 2, 1 }, { 4, 3 } }));
    for (int t = 3 ; t <= 6 ; ++t)
        grid.emplace_back(TheoremCase::CompleteMultipartite, FamilySpec::complete(t));
    grid.emplace_back(TheoremCase::CompleteMultipartite, FamilySpec::complete_multipartite({ 2, 2, 2 }));
    grid.emplace_back(TheoremCase::CompleteMultipartite, FamilySpec::complete_multipartite({ 1, 3, 2, 4 }));
    grid.emplace_back(TheoremCase::Bipartite, FamilySpec::path(6));
    grid.emplace_back(TheoremCase::Bipartite, FamilySpec::cycle(8));
    grid.emplace_back(TheoremCase::Bipartite, FamilySpec::star(5));
    grid.emplace_back(TheoremCase::Bipartite, FamilySpec::tree(12, 7));
    return grid;
}

auto sncolor::exact_grid() -> TheoremGrid
{
    return {
        { TheoremCase::Bipartite, FamilySpec::path(4) },
        { TheoremCase::CompleteMultipartite, FamilySpec::complete(3) },
        { TheoremCase::CompleteMultipartite, FamilySpec::complete_multipartite({ 1, 1, 2 }) },
        { TheoremCase::OddCycle, FamilySpec::cycle(3) },
        { TheoremCase::OddCycle, FamilySpec::cycle(5) },
        { TheoremCase::Amalgam, FamilySpec::amalgam(2, 3, 1) },
        { TheoremCase::Friendship, FamilySpec::friendship(2) },
        { TheoremCase::Tadpole, FamilySpec::tadpole(3, 2) },
        { TheoremCase::Lollipop, FamilySpec::lollipop(4, 2) },
        { TheoremCase::CycleOfCliques, FamilySpec::cycle_of_cliques(2, 3) },
        { TheoremCase::CycleOfCliquesMinus, FamilySpec::cycle_of_cliques_minus(2, 4) },
        { TheoremCase::StackedTriangulation, FamilySpec::stacked_triangulation({}) },
        { TheoremCase::Fan, FamilySpec::fan(2) },
        { TheoremCase::Wheel, FamilySpec::wheel(3) },
        { TheoremCase::Wheel, FamilySpec::wheel(4) },
        { TheoremCase::Wheel, FamilySpec::wheel(5) }
    };
}

auto sncolor::run_grid(const TheoremGrid & grid, bool exact, const SearchLimits & limits) -> std::vector<TheoremReport>
{
    std::vector<TheoremReport> reports;
    for (auto & [c, spec] : grid) {
        try {
            reports.push_back(verify_theorem(c, spec, exact, limits));
        }
        catch (const Error & e) {
            TheoremReport failed{ .theorem = c, .spec = spec, .ok = false };
            failed.reasons.emplace_back(e.what());
            reports.push_back(std::move(failed));
        }
    }
    return reports;
}

auto sncolor::theorem_suite(SuiteScale scale, const SearchLimits & limits) -> std::vector<TheoremReport>
{
    if (scale == SuiteScale::Fast)
        return run_grid(fast_grid(), false, limits);
    return run_grid(exact_grid(), true, limits);
}
