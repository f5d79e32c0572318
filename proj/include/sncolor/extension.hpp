#pragma once

#include <sncolor/coloring.hpp>
#include <sncolor/graph.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sncolor
{
    /// Why a vertex received its colour during extension.
    enum class Rule
    {
        ColorDominating,        ///< adjacent to all k-1 used classes; takes the unused colour
        NearColorDominating,    ///< all k classes used, misses exactly one
        Attractive,             ///< N[w] is k-chromatic and no neighbour can take colour i
        ListSingleton,          ///< any other one-colour list
        Branch                  ///< search decision
    };

    auto to_string(Rule rule) -> std::string_view;

    struct Deduction
    {
        Vertex vertex;
        Color color;
        Rule rule;

        friend auto operator== (const Deduction &, const Deduction &) -> bool = default;
    };

    enum class PropagationStatus
    {
        Progress,       ///< at least one forced assignment made, or nothing left to colour
        Stuck,          ///< uncoloured vertices remain and none is forced
        DeadEnd         ///< some candidate list became empty
    };

    auto to_string(PropagationStatus status) -> std::string_view;

    struct PropagationResult
    {
        PartialColoring coloring;
        std::vector<Deduction> trace;
        PropagationStatus status;
    };

    enum class ExtensionKind
    {
        NotExtendable,
        Unique,
        Multiple
    };

    auto to_string(ExtensionKind kind) -> std::string_view;

    struct ExtensionOutcome
    {
        ExtensionKind kind = ExtensionKind::NotExtendable;
        std::uint64_t count = 0;                    ///< completions found, saturated at the cap
        std::optional<PartialColoring> witness1;    ///< first completion in search order
        std::optional<PartialColoring> witness2;    ///< second, when kind is Multiple
        std::vector<Deduction> trace;               ///< order w_1..w_t, when kind is Unique
        std::uint64_t nodes = 0;
    };

    struct EngineOptions
    {
        bool use_attractive = true;
        /// The closed-neighbourhood chromatic test runs only when |N[w]| is at most this.
        int attractive_threshold = 20;
        /// 0 = unlimited; otherwise BudgetExceeded past this many search nodes.
        std::uint64_t max_nodes = 0;
    };

    /**
     * Extension counting for partial colourings of one graph with a fixed k.
     *
     * The engine keeps a reference to the graph, which must outlive it. It
     * caches which closed neighbourhoods are k-chromatic, so reuse one engine
     * when checking many colourings of the same graph. All member functions
     * are const and may be called concurrently.
     *
     * Uniqueness is labelled: completions that differ by a colour permutation
     * count separately.
     */
    class ExtensionEngine
    {
        public:
            ExtensionEngine(const Graph & g, int k, EngineOptions options = {});

            auto k() const noexcept -> int { return _k; }

            /// Repeatedly colours forced vertices, singletons first (lowest
            /// index), then attractive vertices. An improper input is a DeadEnd.
            auto propagate(const PartialColoring & c) const -> PropagationResult;

            /// Backtracking with propagation at every node, branching on the
            /// fewest-candidates vertex (ties to the lower index) with colours
            /// ascending. Counting stops at `cap` (at least 2).
            auto count_extensions(const PartialColoring & c, std::uint64_t cap = 2) const -> ExtensionOutcome;

            auto is_extendable(const PartialColoring & c) const -> bool;
            auto is_sudoku_coloring(const PartialColoring & c) const -> bool;

        private:
            const Graph & _g;
            int _k;
            EngineOptions _options;
            std::vector<bool> _k_chromatic_neighbourhood;
    };

    auto propagate(const Graph & g, const PartialColoring & c) -> PropagationResult;
    auto count_extensions(const Graph & g, const PartialColoring & c, std::uint64_t cap = 2) -> ExtensionOutcome;
    auto is_extendable(const Graph & g, const PartialColoring & c) -> bool;
    auto is_sudoku_coloring(const Graph & g, const PartialColoring & c) -> bool;

    /// Whether g has exactly k! labelled proper k-colourings. Intended for
    /// k = chi(g), where this means a single colour partition.
    auto is_uniquely_colorable(const Graph & g, int k, std::uint64_t max_nodes = 0) -> bool;

    /// Number of list colourings, saturating at cap. lists[v] is the candidate
    /// set of vertex v; every vertex is treated as uncoloured.
    auto count_list_colorings(const Graph & g, const ColorListState & lists, std::uint64_t cap,
            std::uint64_t max_nodes = 0) -> std::uint64_t;
}
