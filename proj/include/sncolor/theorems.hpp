#pragma once

#include <sncolor/families.hpp>
#include <sncolor/sudoku_number.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sncolor
{
    /// One constructive Sudoku-number result per graph class.
    enum class TheoremCase
    {
        Bipartite,
        CompleteMultipartite,
        OddCycle,
        Amalgam,
        Friendship,
        Tadpole,
        Lollipop,
        CycleOfCliques,
        CycleOfCliquesMinus,
        StackedTriangulation,
        Fan,
        Wheel
    };

    auto to_string(TheoremCase c) -> std::string_view;
    auto theorem_case_from_string(std::string_view name) -> std::optional<TheoremCase>;
    auto all_theorem_cases() -> std::vector<TheoremCase>;

    /// Closed-form Sudoku number claimed for this case. Throws InvalidFamilyParams
    /// when the spec does not meet the case's hypotheses.
    auto sn_formula(TheoremCase c, const FamilySpec & spec) -> int;

    /**
     * Builds the graph and the explicit partial colouring from the case's
     * constructive proof. Where a proof leaves a choice open, the first
     * vertices in generator order are used; see theorems.cpp for each case.
     */
    auto construct(TheoremCase c, const FamilySpec & spec) -> Certificate;

    struct TheoremReport
    {
        TheoremCase theorem;
        FamilySpec spec;
        bool ok = true;
        int certificate_size = 0;
        int formula = 0;
        std::optional<int> exact_sn;
        std::vector<std::string> reasons;
    };

    auto theorem_report_to_json(const TheoremReport & r) -> Json;

    /// Certificate check, plus sn_exact == formula when exact is set.
    auto verify_theorem(TheoremCase c, const FamilySpec & spec, bool exact, const SearchLimits & limits = {})
        -> TheoremReport;

    using TheoremGrid = std::vector<std::pair<TheoremCase, FamilySpec>>;

    enum class SuiteScale
    {
        Fast,
        Exact
    };

    auto fast_grid() -> TheoremGrid;
    auto exact_grid() -> TheoremGrid;

    /// Runs every case; errors are captured as failed reports rather than thrown.
    auto run_grid(const TheoremGrid & grid, bool exact, const SearchLimits & limits = {}) -> std::vector<TheoremReport>;
    auto theorem_suite(SuiteScale scale, const SearchLimits & limits = {}) -> std::vector<TheoremReport>;
}
