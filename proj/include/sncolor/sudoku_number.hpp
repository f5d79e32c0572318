#pragma once

#include <sncolor/coloring.hpp>
#include <sncolor/extension.hpp>
#include <sncolor/graph.hpp>
#include <sncolor/io.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sncolor
{
    /// A claimed Sudoku colouring. provenance is "exact-search" or
    /// "family-theorem:<case name>".
    struct Certificate
    {
        Graph graph;
        PartialColoring partial;
        int claimed_sn = 0;
        std::string provenance;
    };

    auto certificate_to_json(const Certificate & cert) -> Json;
    auto certificate_from_json(const Json & j) -> Certificate;

    struct SearchLimits
    {
        std::uint64_t max_subsets = 0;          ///< 0 = unlimited
        std::uint64_t max_nodes = 0;            ///< extension search nodes, summed; 0 = unlimited
        double max_seconds = 0;                 ///< 0 = unlimited
        unsigned workers = 1;
        bool prune = true;                      ///< apply the pendant and uncoloured-edge lemmas
    };

    struct PruneCounters
    {
        std::uint64_t pendant = 0;
        std::uint64_t uncolored_edge = 0;
    };

    struct SearchReport
    {
        int sn = 0;
        int chromatic_number = 0;
        int lower_bound = 0;                    ///< where the size scan started
        Certificate certificate;
        std::uint64_t subsets_examined = 0;
        std::uint64_t colorings_examined = 0;
        std::uint64_t extension_nodes = 0;
        PruneCounters pruned_by;
        std::chrono::duration<double> elapsed{ 0 };
    };

    /// Deterministic fields only; elapsed time is left out so output is reproducible.
    auto report_to_json(const SearchReport & report) -> Json;

    enum class PruneReason
    {
        None,
        Pendant,
        UncoloredEdge
    };

    /// Why a colouring on exactly the vertex set S can never be Sudoku, for
    /// k >= 3: an uncoloured pendant vertex, or an uncoloured edge whose ends
    /// both have degree at most k-1. Returns None for k < 3.
    auto prune_reason(const Graph & g, std::span<const Vertex> subset, int k) -> PruneReason;
    auto prune_subset(const Graph & g, std::span<const Vertex> subset, int k) -> bool;

    /**
     * Visits one representative per colour-permutation orbit of proper
     * colourings of G[S] with colours 1..k, in first-occurrence form: walking
     * S in ascending order, each new colour is the next unused integer. When
     * k >= 3 and |S| >= k-1, only representatives with at least k-1 distinct
     * colours are produced. The visitor returns false to stop early.
     */
    auto for_each_canonical_coloring(const Graph & g, std::span<const Vertex> subset, int k,
            const std::function<bool (const PartialColoring &)> & visit) -> void;

    auto canonical_colorings(const Graph & g, std::span<const Vertex> subset, int k) -> std::vector<PartialColoring>;

    /// 1 when chi <= 2, otherwise chi - 1: a Sudoku colouring needs at least k-1 colours.
    auto sn_lower_bound(int chromatic_number) -> int;

    /**
     * Exact Sudoku number. Sizes ascend from the lower bound; within a size,
     * subsets go in lexicographic order and colourings in canonical order. The
     * first Sudoku colouring found is the certificate, identical for any worker
     * count. Throws DisconnectedGraph, and BudgetExceeded carrying the proven
     * lower bound.
     */
    auto sn_exact(const Graph & g, const SearchLimits & limits = {}) -> SearchReport;

    struct VerificationReport
    {
        bool ok = true;
        std::vector<std::string> reasons;
        std::optional<int> exact_sn;
    };

    /// Checks k = chi(G), properness, |S| = claimed value and a unique
    /// extension. With exact set, also requires sn_exact to agree.
    auto verify_certificate(const Certificate & cert, bool exact = false, const SearchLimits & limits = {})
        -> VerificationReport;

    struct ScanEntry
    {
        Graph graph;
        int sn = 0;
        bool complete = false;
        bool degenerate_bipartite = false;      ///< K_2: sn = n-1 with chi = 2
    };

    struct ScanLevel
    {
        int n = 0;
        std::uint64_t connected_graphs = 0;     ///< isomorphism classes
        std::vector<ScanEntry> extremal;        ///< graphs with sn = n - 1
        std::vector<ScanEntry> counterexamples; ///< non-complete with sn = n-1, or complete without
    };

    struct ScanReport
    {
        int max_n = 0;
        std::vector<ScanLevel> levels;
        auto counterexample_count() const -> std::size_t;
    };

    auto scan_report_to_json(const ScanReport & report) -> Json;

    /// All connected graphs on 2..max_n vertices up to isomorphism (max_n <= 7).
    auto connected_graphs(int n) -> std::vector<Graph>;

    /// Tests "sn(G) = n-1 exactly for complete graphs" on every connected
    /// graph with 2..max_n vertices. Counterexamples are reported, not thrown.
    auto conjecture_scan(int max_n, const SearchLimits & limits = {}) -> ScanReport;

    /// Brute-force isomorphism test, respecting degrees.
    auto isomorphic(const Graph & a, const Graph & b) -> bool;
}
