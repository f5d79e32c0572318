#include "oracles.hpp"

#include <sncolor/error.hpp>
#include <sncolor/extension.hpp>
#include <sncolor/families.hpp>
#include <sncolor/theorems.hpp>

#include <doctest.h>

#include <numeric>

using namespace sncolor;

namespace
{
    auto unique(const Certificate & cert) -> bool
    {
        return count_extensions(cert.graph, cert.partial).kind == ExtensionKind::Unique;
    }
}

TEST_CASE("case names")
{
    CHECK(all_theorem_cases().size() == 12);
    for (auto c : all_theorem_cases())
        CHECK(theorem_case_from_string(to_string(c)) == c);
    CHECK(to_string(TheoremCase::CycleOfCliquesMinus) == "cycle-of-cliques-minus");
    CHECK(to_string(TheoremCase::OddCycle) == "odd-cycle");
    CHECK_FALSE(theorem_case_from_string("petersen"));
}

TEST_CASE("formulas")
{
    CHECK(sn_formula(TheoremCase::Bipartite, FamilySpec::path(5)) == 1);
    CHECK(sn_formula(TheoremCase::CompleteMultipartite, FamilySpec::complete_multipartite({ 2, 2, 2 })) == 2);
    CHECK(sn_formula(TheoremCase::CompleteMultipartite, FamilySpec::complete(5)) == 4);
    CHECK(sn_formula(TheoremCase::OddCycle, FamilySpec::cycle(9)) == 5);
    CHECK(sn_formula(TheoremCase::Amalgam, FamilySpec::amalgam(2, 4, 2)) == 3);
    CHECK(sn_formula(TheoremCase::Friendship, FamilySpec::friendship(4)) == 4);
    CHECK(sn_formula(TheoremCase::Tadpole, FamilySpec::tadpole(5, 3)) == 4);
    CHECK(sn_formula(TheoremCase::Tadpole, FamilySpec::tadpole(4, 3)) == 1);
    CHECK(sn_formula(TheoremCase::Lollipop, FamilySpec::lollipop(4, 3)) == 4);
    CHECK(sn_formula(TheoremCase::CycleOfCliques, FamilySpec::cycle_of_cliques(3, 4)) == 6);
    CHECK(sn_formula(TheoremCase::CycleOfCliquesMinus, FamilySpec::cycle_of_cliques_minus(5, 5)) == 11);
    CHECK(sn_formula(TheoremCase::Fan, FamilySpec::fan(4)) == 2);
    CHECK(sn_formula(TheoremCase::Wheel, FamilySpec::wheel(6)) == 2);
    CHECK(sn_formula(TheoremCase::Wheel, FamilySpec::wheel(7)) == 4);
    CHECK(sn_formula(TheoremCase::Wheel, FamilySpec::wheel(3)) == 3);

    CHECK_THROWS_AS(sn_formula(TheoremCase::OddCycle, FamilySpec::cycle(6)), Error);
    CHECK_THROWS_AS(sn_formula(TheoremCase::Bipartite, FamilySpec::cycle(5)), Error);
    CHECK_THROWS_AS(sn_formula(TheoremCase::CompleteMultipartite, FamilySpec::complete_multipartite({ 2, 3 })), Error);
    CHECK_THROWS_AS(sn_formula(TheoremCase::Wheel, FamilySpec::fan(4)), Error);
}

TEST_CASE("constructions")
{
    auto c13 = construct(TheoremCase::OddCycle, FamilySpec::cycle(13));
    CHECK(c13.partial.domain_size() == 7);
    CHECK(c13.provenance == "family-theorem:odd-cycle");
    CHECK(unique(c13));
    CHECK(c13.partial[0] == 1);
    CHECK(c13.partial[2] == 2);
    CHECK(c13.partial[4] == 1);
    CHECK(c13.partial[11] == 3);

    auto f2 = construct(TheoremCase::Amalgam, FamilySpec::amalgam(2, 3, 1));
    CHECK(f2.partial.domain_size() == 2);
    CHECK(f2.graph == generate(FamilySpec::friendship(2)));
    CHECK(unique(f2));

    auto l42 = construct(TheoremCase::Lollipop, FamilySpec::lollipop(4, 2));
    CHECK(l42.partial.domain_size() == 3);
    CHECK(unique(l42));

    auto minus = construct(TheoremCase::CycleOfCliquesMinus, FamilySpec::cycle_of_cliques_minus(5, 5));
    CHECK(minus.partial.domain_size() == 11);
    CHECK(unique(minus));

    auto k222 = construct(TheoremCase::CompleteMultipartite, FamilySpec::complete_multipartite({ 2, 2, 2 }));
    CHECK(k222.partial.domain_size() == 2);
    CHECK(unique(k222));

    auto tree = construct(TheoremCase::Bipartite, FamilySpec::tree(9, 3));
    CHECK(tree.partial.domain() == std::vector<Vertex>{ 0 });
    CHECK(tree.partial[0] == 1);
    CHECK(unique(tree));

    auto w7 = construct(TheoremCase::Wheel, FamilySpec::wheel(7));
    CHECK(w7.partial.domain_size() == 4);
    CHECK(w7.partial[6] == 4);
    CHECK(unique(w7));

    CHECK(construct(TheoremCase::Wheel, FamilySpec::wheel(3)).partial.domain_size() == 3);
}

TEST_CASE("odd-cycle certificate on thirteen vertices")
{
    auto cert = construct(TheoremCase::OddCycle, FamilySpec::cycle(13));
    auto ext = count_extensions(cert.graph, cert.partial);
    REQUIRE(ext.kind == ExtensionKind::Unique);
    CHECK(ext.witness1->complete());
    CHECK(ext.witness1->distinct_colors() == 3);
}

TEST_CASE("verify_theorem examples")
{
    auto w4 = verify_theorem(TheoremCase::Wheel, FamilySpec::wheel(4), true);
    CHECK(w4.ok);
    CHECK(w4.exact_sn == 2);

    auto t32 = verify_theorem(TheoremCase::Tadpole, FamilySpec::tadpole(3, 2), true);
    CHECK(t32.ok);
    CHECK(t32.exact_sn == 2);

    auto c6k4 = verify_theorem(TheoremCase::CycleOfCliques, FamilySpec::cycle_of_cliques(3, 4), false);
    CHECK(c6k4.ok);
    CHECK(c6k4.certificate_size == 6);
    CHECK_FALSE(c6k4.exact_sn);

    auto c8k4 = verify_theorem(TheoremCase::CycleOfCliques, FamilySpec::cycle_of_cliques(4, 4), false);
    CHECK(c8k4.ok);
    CHECK(c8k4.certificate_size == 8);

    auto lollipop = verify_theorem(TheoremCase::Lollipop, FamilySpec::lollipop(4, 2), true);
    CHECK(lollipop.ok);
    CHECK(lollipop.exact_sn == 3);

    auto j = theorem_report_to_json(lollipop);
    CHECK(j["case"] == "lollipop");
    CHECK(j["ok"] == true);
    CHECK(j["exact_sn"] == 3);

    CHECK_THROWS_AS(verify_theorem(TheoremCase::Tadpole, FamilySpec::tadpole(2, 2), false), Error);
    auto captured = run_grid({ { TheoremCase::Tadpole, FamilySpec::tadpole(2, 2) } }, false);
    REQUIRE(captured.size() == 1);
    CHECK_FALSE(captured[0].ok);
}

TEST_CASE("fast grid")
{
    auto reports = theorem_suite(SuiteScale::Fast);
    CHECK(reports.size() == fast_grid().size());
    for (auto & r : reports) {
        CAPTURE(r.spec.describe());
        CHECK(r.certificate_size == r.formula);
        bool single_vertex_copies = r.theorem == TheoremCase::Amalgam && r.spec.n == r.spec.r + 1;
        CHECK(r.ok != single_vertex_copies);
    }
}

TEST_CASE("amalgam with one private vertex per copy")
{
    // The printed construction colours only r-1 core vertices when n = r+1.
    // x_0 and every x_i then share the list {r, r+1}, so the colouring extends two ways.
    for (int m = 2 ; m <= 4 ; ++m)
        for (int n = 3 ; n <= 5 ; ++n) {
            auto spec = FamilySpec::amalgam(m, n, n - 1);
            auto cert = construct(TheoremCase::Amalgam, spec);
            CHECK(cert.partial.domain_size() == n - 2);
            CHECK(count_extensions(cert.graph, cert.partial).kind == ExtensionKind::Multiple);
            auto exact = sn_exact(cert.graph);
            CHECK(exact.sn == sn_formula(TheoremCase::Amalgam, spec) + 1);
            CHECK(exact.sn == oracle::sudoku_number(cert.graph));
        }
}

TEST_CASE("exact grid")
{
    auto reports = theorem_suite(SuiteScale::Exact);
    CHECK(reports.size() == exact_grid().size());
    for (auto & r : reports) {
        CAPTURE(r.spec.describe());
        CHECK(r.ok);
        REQUIRE(r.exact_sn);
        CHECK(*r.exact_sn == r.formula);
    }
    CHECK(run_grid({}, true).empty());
}

TEST_CASE("amalgam certificates do not depend on which copy comes first")
{
    auto spec = FamilySpec::amalgam(3, 5, 2);
    auto cert = construct(TheoremCase::Amalgam, spec);
    REQUIRE(unique(cert));

    // swap the blocks of copy 1 and copy 3
    int block = spec.n - spec.r;
    std::vector<Vertex> perm(cert.graph.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int j = 0 ; j < block ; ++j)
        std::swap(perm[spec.r + j], perm[spec.r + 2 * block + j]);

    auto g = cert.graph.relabelled(perm);
    CHECK(g == cert.graph);
    auto moved = cert.partial.relabelled(perm);
    CHECK(count_extensions(g, moved).kind == ExtensionKind::Unique);
}

TEST_CASE("certificates survive colour permutations and relabelling")
{
    std::mt19937_64 rng(73);
    for (auto & [c, spec] : fast_grid()) {
        auto cert = construct(c, spec);
        if (cert.graph.order() > 60)
            continue;
        auto kind = count_extensions(cert.graph, cert.partial).kind;
        auto pi = oracle::random_color_permutation(rng, cert.partial.k());
        CHECK(count_extensions(cert.graph, cert.partial.permuted(pi)).kind == kind);
        auto perm = oracle::random_permutation(rng, cert.graph.order());
        CHECK(count_extensions(cert.graph.relabelled(perm), cert.partial.relabelled(perm)).kind == kind);
    }
}
