#include <sncolor/chromatic.hpp>
#include <sncolor/error.hpp>
#include <sncolor/extension.hpp>
#include <sncolor/families.hpp>
#include <sncolor/io.hpp>
#include <sncolor/puzzle.hpp>
#include <sncolor/sudoku_number.hpp>
#include <sncolor/theorems.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace sncolor;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_computation = 1,
        exit_usage = 2,
        exit_verification = 3
    };

    struct Options
    {
        std::string input = "-";
        std::string coloring;
        std::string certificate;
        std::string out;
        std::string format;
        std::string family;
        std::string theorem;
        std::string suite;
        std::string puzzle;
        std::string puzzle_file;
        std::string parts;
        std::string attach;
        int n = 0;
        int m = 0;
        int r = 0;
        int b = 0;
        int max_n = 6;
        std::uint64_t seed = 0;
        std::uint64_t cap = 2;
        unsigned workers = 1;
        std::uint64_t budget_nodes = 0;
        std::uint64_t budget_subsets = 0;
        double budget_seconds = 0;
        bool exact = false;
        bool pretty = false;
        bool dot = false;
        bool no_prune = false;
    };

    auto usage_error(const std::string & message) -> Error
    {
        return Error(ErrorCode::InvalidFamilyParams, message);
    }

    auto read_text(const std::string & path) -> std::string
    {
        if (path.empty() || path == "-")
            return std::string(std::istreambuf_iterator<char>(std::cin), {});

        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return std::string(std::istreambuf_iterator<char>(in), {});
    }

    class Output
    {
        public:
            explicit Output(const std::string & path)
            {
                if (! path.empty() && path != "-") {
                    _file.open(path, std::ios::binary);
                    if (! _file)
                        throw std::runtime_error("cannot write " + path);
                }
            }

            auto stream() -> std::ostream & { return _file.is_open() ? _file : std::cout; }

        private:
            std::ofstream _file;
    };

    auto graph_format(const Options & o, std::string_view text) -> GraphFormat
    {
        if (o.format == "json")
            return GraphFormat::Json;
        if (o.format == "edgelist")
            return GraphFormat::EdgeList;
        return detect_format(text);
    }

    auto load_graph(const Options & o) -> Graph
    {
        auto text = read_text(o.input);
        return parse_graph(text, graph_format(o, text));
    }

    auto load_coloring(const Options & o, const Graph & g) -> PartialColoring
    {
        if (o.coloring.empty())
            throw usage_error("--coloring is required");
        return parse_coloring(read_text(o.coloring), g.order());
    }

    auto limits(const Options & o) -> SearchLimits
    {
        return {
            .max_subsets = o.budget_subsets,
            .max_nodes = o.budget_nodes,
            .max_seconds = o.budget_seconds,
            .workers = o.workers,
            .prune = ! o.no_prune
        };
    }

    auto print(std::ostream & out, const Json & j, bool pretty) -> void
    {
        out << (pretty ? j.dump(2) : j.dump()) << '\n';
    }

    auto split(const std::string & text, char sep) -> std::vector<std::string>
    {
        std::vector<std::string> pieces;
        std::stringstream in(text);
        std::string piece;
        while (std::getline(in, piece, sep))
            if (! piece.empty())
                pieces.push_back(piece);
        return pieces;
    }

    auto to_int(const std::string & s) -> int
    {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw usage_error("not an integer: '" + s + "'");
        return value;
    }

    auto family_spec(const Options & o) -> FamilySpec
    {
        auto family = family_from_string(o.family);
        if (! family)
            throw usage_error("unknown family '" + o.family + "'");

        FamilySpec spec;
        spec.family = *family;
        spec.n = o.n;
        spec.m = o.m;
        spec.r = o.r;
        spec.b = o.b;
        spec.seed = o.seed;
        for (auto & p : split(o.parts, ','))
            spec.parts.push_back(to_int(p));
        for (auto & e : split(o.attach, ',')) {
            auto ends = split(e, '-');
            if (ends.size() != 2)
                throw usage_error("attachment must look like u-v: '" + e + "'");
            spec.attachments.emplace_back(to_int(ends[0]), to_int(ends[1]));
        }
        return spec;
    }

    /// The theorem case that covers a family, when the user does not name one.
    auto default_case(const FamilySpec & spec) -> TheoremCase
    {
        switch (spec.family) {
            case Family::Path:
            case Family::Star:
            case Family::Tree:
                return TheoremCase::Bipartite;
            case Family::Cycle:
                return spec.n % 2 == 0 ? TheoremCase::Bipartite : TheoremCase::OddCycle;
            case Family::Complete:
            case Family::CompleteMultipartite:
                return TheoremCase::CompleteMultipartite;
            case Family::Friendship:            return TheoremCase::Friendship;
            case Family::Amalgam:               return TheoremCase::Amalgam;
            case Family::Tadpole:               return TheoremCase::Tadpole;
            case Family::Lollipop:              return TheoremCase::Lollipop;
            case Family::CycleOfCliques:        return TheoremCase::CycleOfCliques;
            case Family::CycleOfCliquesMinus:   return TheoremCase::CycleOfCliquesMinus;
            case Family::StackedTriangulation:  return TheoremCase::StackedTriangulation;
            case Family::Fan:                   return TheoremCase::Fan;
            case Family::Wheel:                 return TheoremCase::Wheel;
            case Family::SudokuGrid:
                break;
        }
        throw usage_error("no theorem covers family " + std::string(to_string(spec.family)));
    }

    auto cmd_gen(const Options & o) -> int
    {
        auto g = generate(family_spec(o));
        Output out(o.out);
        if (o.dot)
            out.stream() << emit_dot(g);
        else if (o.format == "edgelist")
            out.stream() << serialize_graph(g, GraphFormat::EdgeList);
        else if (o.pretty)
            print(out.stream(), graph_to_json(g), true);
        else
            out.stream() << serialize_graph(g, GraphFormat::Json) << '\n';
        return exit_ok;
    }

    auto cmd_chroma(const Options & o) -> int
    {
        auto g = load_graph(o);
        auto result = chromatic_number(g, o.budget_nodes);
        Output out(o.out);
        if (o.dot) {
            out.stream() << emit_dot(g, result.coloring);
            return exit_ok;
        }
        Json j;
        j["chromatic_number"] = result.chromatic_number;
        j["clique"] = result.clique;
        j["coloring"] = coloring_to_json(result.coloring);
        j["nodes"] = result.nodes;
        print(out.stream(), j, o.pretty);
        return exit_ok;
    }

    auto cmd_extend_count(const Options & o) -> int
    {
        auto g = load_graph(o);
        auto c = load_coloring(o, g);
        ExtensionEngine engine(g, c.k(), { .max_nodes = o.budget_nodes });
        auto outcome = engine.count_extensions(c, o.cap);

        Output out(o.out);
        if (o.dot) {
            out.stream() << emit_dot(g, outcome.witness1 ? *outcome.witness1 : c);
            return exit_ok;
        }
        Json j;
        j["kind"] = to_string(outcome.kind);
        j["count"] = outcome.count;
        j["cap"] = std::max<std::uint64_t>(o.cap, 2);
        j["witness"] = outcome.witness1 ? coloring_to_json(*outcome.witness1) : Json();
        j["second_witness"] = outcome.witness2 ? coloring_to_json(*outcome.witness2) : Json();
        j["nodes"] = outcome.nodes;
        print(out.stream(), j, o.pretty);
        return exit_ok;
    }

    auto cmd_solve(const Options & o) -> int
    {
        auto g = load_graph(o);
        auto c = load_coloring(o, g);
        ExtensionEngine engine(g, c.k(), { .max_nodes = o.budget_nodes });
        auto outcome = engine.count_extensions(c, 2);

        Output out(o.out);
        if (o.dot) {
            out.stream() << emit_dot(g, outcome.kind == ExtensionKind::Unique ? *outcome.witness1 : c);
            return exit_ok;
        }
        for (auto & step : outcome.trace)
            out.stream() << step.vertex << ' ' << step.color << ' ' << to_string(step.rule) << '\n';

        Json j;
        j["kind"] = to_string(outcome.kind);
        j["extension"] = outcome.kind == ExtensionKind::Unique ? coloring_to_json(*outcome.witness1) : Json();
        print(out.stream(), j, o.pretty);
        return exit_ok;
    }

    auto cmd_sn(const Options & o) -> int
    {
        auto g = load_graph(o);
        auto report = sn_exact(g, limits(o));

        Output out(o.out);
        if (o.dot) {
            out.stream() << emit_dot(g, report.certificate.partial);
            return exit_ok;
        }
        auto j = report_to_json(report);
        if (o.pretty)
            j["elapsed_seconds"] = report.elapsed.count();
        print(out.stream(), j, o.pretty);
        return exit_ok;
    }

    auto cmd_verify(const Options & o) -> int
    {
        Output out(o.out);
        int given = ! o.certificate.empty() + ! o.suite.empty() + ! o.family.empty();
        if (given != 1)
            throw usage_error("verify takes exactly one of --certificate, --suite, --family");

        if (! o.certificate.empty()) {
            auto cert = certificate_from_json(Json::parse(read_text(o.certificate)));
            auto report = verify_certificate(cert, o.exact, limits(o));
            Json j;
            j["ok"] = report.ok;
            j["claimed_sn"] = cert.claimed_sn;
            j["provenance"] = cert.provenance;
            j["reasons"] = report.reasons;
            j["exact_sn"] = report.exact_sn ? Json(*report.exact_sn) : Json();
            print(out.stream(), j, o.pretty);
            return report.ok ? exit_ok : exit_verification;
        }

        if (! o.suite.empty()) {
            if (o.suite != "fast" && o.suite != "exact")
                throw usage_error("--suite must be fast or exact");
            auto scale = o.suite == "fast" ? SuiteScale::Fast : SuiteScale::Exact;
            bool ok = true;
            for (auto & report : theorem_suite(scale, limits(o))) {
                ok = ok && report.ok;
                out.stream() << theorem_report_to_json(report).dump() << '\n';
            }
            return ok ? exit_ok : exit_verification;
        }

        auto spec = family_spec(o);
        TheoremCase c;
        if (o.theorem.empty())
            c = default_case(spec);
        else if (auto named = theorem_case_from_string(o.theorem))
            c = *named;
        else
            throw usage_error("unknown theorem case '" + o.theorem + "'");

        auto report = verify_theorem(c, spec, o.exact, limits(o));
        if (o.dot) {
            auto cert = construct(c, spec);
            out.stream() << emit_dot(cert.graph, cert.partial);
        }
        else
            print(out.stream(), theorem_report_to_json(report), o.pretty);
        return report.ok ? exit_ok : exit_verification;
    }

    auto cmd_sudoku(const Options & o) -> int
    {
        if (o.puzzle.empty() == o.puzzle_file.empty())
            throw usage_error("give the puzzle as an argument or with --file");

        auto text = o.puzzle.empty() ? read_text(o.puzzle_file) : o.puzzle;
        auto result = solve_puzzle(text);

        Json j;
        j["solutions"] = result.solutions == 2 ? Json("2+") : Json(result.solutions);
        j["grid"] = result.grid ? Json(*result.grid) : Json();
        Output out(o.out);
        print(out.stream(), j, o.pretty);
        return exit_ok;
    }

    auto cmd_conjecture_scan(const Options & o) -> int
    {
        auto report = conjecture_scan(o.max_n, limits(o));
        Output out(o.out);
        print(out.stream(), scan_report_to_json(report), o.pretty);
        return exit_ok;
    }

    auto exit_code(ErrorCode code) -> int
    {
        switch (code) {
            case ErrorCode::BudgetExceeded:
                return exit_computation;
            default:
                return exit_usage;
        }
    }
}

auto main(int argc, char * argv[]) -> int
{
    Options o;
    CLI::App app{ "Sudoku colourings of graphs" };
    app.require_subcommand(1);

    auto add_family = [&] (CLI::App * cmd) {
        cmd->add_option("--n", o.n, "order parameter n");
        cmd->add_option("--m", o.m, "parameter m");
        cmd->add_option("--r", o.r, "core order r (amalgam)");
        cmd->add_option("--b", o.b, "box side b (sudoku-grid)");
        cmd->add_option("--parts", o.parts, "part sizes, comma separated");
        cmd->add_option("--attach", o.attach, "stacked triangulation attachments, e.g. 0-1,1-2");
        cmd->add_option("--seed", o.seed, "seed for random families");
    };
    auto add_budgets = [&] (CLI::App * cmd) {
        cmd->add_option("--budget-nodes", o.budget_nodes, "search node budget (0 = none)");
        cmd->add_option("--budget-seconds", o.budget_seconds, "time budget in seconds (0 = none)");
        cmd->add_option("--budget-subsets", o.budget_subsets, "subset budget (0 = none)");
        cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_flag("--no-prune", o.no_prune, "disable the subset pruning lemmas");
    };
    auto add_common = [&] (CLI::App * cmd) {
        cmd->add_option("--out", o.out, "output file (default stdout)");
        cmd->add_flag("--pretty", o.pretty, "indented, human-oriented output");
        cmd->add_flag("--dot", o.dot, "emit Graphviz DOT instead of JSON");
    };
    auto add_graph_input = [&] (CLI::App * cmd) {
        cmd->add_option("graph", o.input, "graph file, '-' for stdin");
        cmd->add_option("--format", o.format, "input format")->check(CLI::IsMember({ "edgelist", "json" }));
    };

    auto gen = app.add_subcommand("gen", "generate a family graph");
    gen->add_option("--family", o.family, "family name")->required();
    gen->add_option("--format", o.format, "output format")->check(CLI::IsMember({ "edgelist", "json" }));
    add_family(gen);
    add_common(gen);

    auto chroma = app.add_subcommand("chroma", "exact chromatic number");
    add_graph_input(chroma);
    chroma->add_option("--budget-nodes", o.budget_nodes, "search node budget (0 = none)");
    add_common(chroma);

    auto extend = app.add_subcommand("extend-count", "count extensions of a partial colouring");
    add_graph_input(extend);
    extend->add_option("--coloring", o.coloring, "partial colouring JSON")->required();
    extend->add_option("--cap", o.cap, "stop counting at this many extensions");
    extend->add_option("--budget-nodes", o.budget_nodes, "search node budget (0 = none)");
    add_common(extend);

    auto solve = app.add_subcommand("solve", "deduction trace and unique extension");
    add_graph_input(solve);
    solve->add_option("--coloring", o.coloring, "partial colouring JSON")->required();
    solve->add_option("--budget-nodes", o.budget_nodes, "search node budget (0 = none)");
    add_common(solve);

    auto sn = app.add_subcommand("sn", "exact Sudoku number");
    add_graph_input(sn);
    add_budgets(sn);
    add_common(sn);

    auto verify = app.add_subcommand("verify", "check a certificate or theorem instance");
    verify->add_option("--family", o.family, "family name");
    verify->add_option("--case", o.theorem, "theorem case (default: inferred from the family)");
    verify->add_option("--certificate", o.certificate, "certificate JSON file");
    verify->add_option("--suite", o.suite, "run the fast or exact theorem grid");
    verify->add_flag("--exact", o.exact, "also compare against the exact Sudoku number");
    add_family(verify);
    add_budgets(verify);
    add_common(verify);

    auto sudoku = app.add_subcommand("sudoku", "count solutions of a 9x9 puzzle");
    sudoku->add_option("puzzle", o.puzzle, "81 characters, '0' or '.' for blanks");
    sudoku->add_option("--file", o.puzzle_file, "read the puzzle from a file");
    sudoku->add_option("--out", o.out, "output file (default stdout)");
    sudoku->add_flag("--pretty", o.pretty, "indented output");

    auto scan = app.add_subcommand("conjecture-scan", "sn = n-1 only for complete graphs?");
    scan->add_option("--max-n", o.max_n, "largest order to scan")->check(CLI::Range(2, 7));
    add_budgets(scan);
    scan->add_option("--out", o.out, "output file (default stdout)");
    scan->add_flag("--pretty", o.pretty, "indented output");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed())          return cmd_gen(o);
        if (chroma->parsed())       return cmd_chroma(o);
        if (extend->parsed())       return cmd_extend_count(o);
        if (solve->parsed())        return cmd_solve(o);
        if (sn->parsed())           return cmd_sn(o);
        if (verify->parsed())       return cmd_verify(o);
        if (sudoku->parsed())       return cmd_sudoku(o);
        if (scan->parsed())         return cmd_conjecture_scan(o);
    }
    catch (const ParseError & e) {
        std::cerr << "sncolor: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "sncolor: " << e.what() << '\n';
        Json j;
        j["error"] = "BudgetExceeded";
        j["message"] = e.what();
        j["proven_lower_bound"] = e.proven_lower_bound();
        std::cout << j.dump() << '\n';
        return exit_computation;
    }
    catch (const Error & e) {
        std::cerr << "sncolor: " << e.what() << '\n';
        return exit_code(e.code());
    }
    catch (const nlohmann::json::exception & e) {
        std::cerr << "sncolor: bad JSON: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "sncolor: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
