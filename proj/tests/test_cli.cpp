#include "oracles.hpp"

#include <sncolor/io.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace sncolor;

namespace
{
    struct Run
    {
        int status = -1;
        std::string out;
    };

    auto run(const std::string & args, const std::string & input = "") -> Run
    {
        std::string command = std::string(SNCOLOR_CLI) + " " + args + " 2>/dev/null";
        if (! input.empty()) {
            auto path = std::filesystem::temp_directory_path() / "sncolor_cli_stdin.txt";
            std::ofstream(path) << input;
            command += " < " + path.string();
        }

        Run result;
        FILE * pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buffer[4096];
        while (auto got = std::fread(buffer, 1, sizeof buffer, pipe))
            result.out.append(buffer, got);
        int raw = pclose(pipe);
        result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        return result;
    }

    auto scratch(const std::string & name, const std::string & text) -> std::string
    {
        auto path = std::filesystem::temp_directory_path() / ("sncolor_cli_" + name);
        std::ofstream(path) << text;
        return path.string();
    }

    auto lines(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (std::size_t end ; (end = text.find('\n', start)) != std::string::npos ; start = end + 1)
            out.push_back(text.substr(start, end - start));
        return out;
    }
}

TEST_CASE("gen")
{
    auto wheel = run("gen --family wheel --n 6");
    CHECK(wheel.status == 0);
    CHECK(Json::parse(wheel.out)["n"] == 7);

    auto amalgam = run("gen --family amalgam --m 3 --n 4 --r 2");
    CHECK(Json::parse(amalgam.out)["n"] == 8);

    auto grid = run("gen --family sudoku-grid --b 2 --format edgelist");
    CHECK(grid.status == 0);
    CHECK(grid.out.starts_with("16 "));

    auto multi = run("gen --family complete-multipartite --parts 2,2,2");
    CHECK(Json::parse(multi.out)["edges"].size() == 12);

    auto stacked = run("gen --family stacked-triangulation --attach 0-2,1-2");
    CHECK(Json::parse(stacked.out)["n"] == 5);

    auto dot = run("gen --family cycle --n 4 --dot");
    CHECK(dot.out.starts_with("graph G {"));

    auto out = std::filesystem::temp_directory_path() / "sncolor_cli_out.json";
    CHECK(run("gen --family path --n 3 --out " + out.string()).status == 0);
    std::ifstream in(out);
    CHECK(Json::parse(in)["n"] == 3);

    CHECK(run("gen --family lollipop --n 3 --m 2").status == 2);
    CHECK(run("gen --family amalgam --m 1 --n 3 --r 1").status == 2);
    CHECK(run("gen --family hypercube --n 3").status == 2);
    CHECK(run("gen --family complete-multipartite --parts 2,x").status == 2);
}

TEST_CASE("gen output feeds every consumer")
{
    auto graph = scratch("c5.json", run("gen --family cycle --n 5").out);
    auto edges = scratch("c5.txt", run("gen --family cycle --n 5 --format edgelist").out);
    auto colouring = scratch("c5_col.json", R"({"k":3,"colors":{"0":1,"2":2,"3":3}})");

    for (auto & file : { graph, edges }) {
        auto chroma = run("chroma " + file);
        CHECK(chroma.status == 0);
        CHECK(Json::parse(chroma.out)["chromatic_number"] == 3);

        auto sn = run("sn " + file);
        CHECK(sn.status == 0);
        CHECK(Json::parse(sn.out)["sn"] == 3);

        auto count = run("extend-count " + file + " --coloring " + colouring);
        CHECK(Json::parse(count.out)["kind"] == "unique");

        CHECK(run("solve " + file + " --coloring " + colouring).status == 0);
    }
    CHECK(Json::parse(run("chroma -", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").out)["chromatic_number"] == 3);
    CHECK(Json::parse(run("chroma --format edgelist", "3 2\n0 1\n1 2\n").out)["chromatic_number"] == 2);

    auto sn = run("sn " + graph);
    auto cert = scratch("cert.json", Json::parse(sn.out)["certificate"].dump());
    auto verified = run("verify --certificate " + cert + " --exact");
    CHECK(verified.status == 0);
    CHECK(Json::parse(verified.out)["ok"] == true);
}

TEST_CASE("sn output does not depend on workers")
{
    auto graph = scratch("tadpole.json", run("gen --family tadpole --n 7 --m 4").out);
    auto one = run("sn " + graph + " --workers 1");
    CHECK(one.status == 0);
    CHECK(Json::parse(one.out)["sn"] == 5);
    for (int w : { 2, 4, 7 })
        CHECK(run("sn " + graph + " --workers " + std::to_string(w)).out == one.out);
    CHECK(run("sn " + graph + " --workers 1").out == one.out);
    CHECK(Json::parse(run("sn " + graph + " --pretty").out).contains("elapsed_seconds"));
}

TEST_CASE("extend-count")
{
    auto k3 = scratch("k3.json", run("gen --family complete --n 3").out);
    auto one = scratch("k3_one.json", R"({"k":3,"colors":{"0":1}})");
    auto result = run("extend-count " + k3 + " --coloring " + one);
    CHECK(result.status == 0);
    auto j = Json::parse(result.out);
    CHECK(j["kind"] == "multiple");
    CHECK(j["count"] == 2);

    auto c5 = scratch("c5e.json", run("gen --family cycle --n 5").out);
    auto empty = scratch("c5_empty.json", R"({"k":3,"colors":{}})");
    CHECK(Json::parse(run("extend-count " + c5 + " --coloring " + empty + " --cap 100").out)["count"] == 30);

    auto bad = scratch("k3_bad.json", R"({"k":3,"colors":{"0":1,"1":1}})");
    CHECK(Json::parse(run("extend-count " + k3 + " --coloring " + bad).out)["kind"] == "not-extendable");
}

TEST_CASE("solve prints the deduction trace")
{
    auto c13 = scratch("c13.json", run("gen --family cycle --n 13").out);
    auto example = scratch("c13_col.json", R"({"k":3,"colors":{"0":1,"4":1,"8":1,"2":2,"6":2,"10":2,"12":3}})");
    auto result = run("solve " + c13 + " --coloring " + example);
    CHECK(result.status == 0);
    auto out = lines(result.out);
    REQUIRE(out.size() == 7);
    for (int i = 0 ; i < 6 ; ++i)
        CHECK(out[i].ends_with(" near-color-dominating"));
    auto summary = Json::parse(out.back());
    CHECK(summary["kind"] == "unique");
    CHECK(summary["extension"]["colors"].size() == 13);

    auto k3 = scratch("k3s.json", run("gen --family complete --n 3").out);
    auto one = scratch("k3s_one.json", R"({"k":3,"colors":{"0":1}})");
    auto multi = lines(run("solve " + k3 + " --coloring " + one).out);
    REQUIRE(multi.size() == 1);
    CHECK(Json::parse(multi[0])["kind"] == "multiple");
}

TEST_CASE("verify")
{
    auto lollipop = run("verify --family lollipop --n 4 --m 2 --exact");
    CHECK(lollipop.status == 0);
    auto j = Json::parse(lollipop.out);
    CHECK(j["ok"] == true);
    CHECK(j["exact_sn"] == 3);

    CHECK(Json::parse(run("verify --family cycle --n 7").out)["case"] == "odd-cycle");
    CHECK(Json::parse(run("verify --family cycle --n 8").out)["case"] == "bipartite");
    CHECK(Json::parse(run("verify --family complete --n 5 --exact").out)["exact_sn"] == 4);
    CHECK(run("verify --family wheel --n 6 --case wheel").status == 0);
    CHECK(run("verify --family wheel --n 6 --case fan").status == 2);
    CHECK(run("verify --family sudoku-grid --b 2").status == 2);

    auto suite = run("verify --suite exact");
    CHECK(suite.status == 0);
    for (auto & line : lines(suite.out))
        CHECK(Json::parse(line)["ok"] == true);

    // the construction for single-vertex amalgam copies is not a Sudoku colouring
    CHECK(run("verify --family amalgam --m 2 --n 3 --r 2").status == 3);
    CHECK(run("verify --suite fast").status == 3);

    auto c5 = run("gen --family cycle --n 5").out;
    Json weak{ { "graph", Json::parse(c5) }, { "k", 3 }, { "colors", { { "0", 1 } } }, { "claimed_sn", 1 },
               { "provenance", "exact-search" } };
    auto failed = run("verify --certificate " + scratch("weak.json", weak.dump()));
    CHECK(failed.status == 3);
    CHECK(Json::parse(failed.out)["ok"] == false);

    CHECK(run("verify").status == 2);
    CHECK(run("verify --suite huge").status == 2);
}

TEST_CASE("sudoku")
{
    auto known = oracle::SudokuSolver("000000010400000000020000000000050407008000300001090000300400200050100000000806000");
    REQUIRE(known.count(2) == 1);
    auto solved = known.solution();

    auto full = Json::parse(run("sudoku " + solved).out);
    CHECK(full["solutions"] == 1);
    CHECK(full["grid"] == solved);

    auto blank = Json::parse(run("sudoku " + std::string(81, '.')).out);
    CHECK(blank["solutions"] == "2+");
    CHECK(blank["grid"].is_null());

    auto file = run(std::string("sudoku --file ") + SNCOLOR_DATA + "/puzzle17.txt");
    CHECK(file.status == 0);
    CHECK(Json::parse(file.out)["grid"] == solved);

    CHECK(run("sudoku 123").status == 2);
    CHECK(run("sudoku " + std::string(80, '0') + "x").status == 2);
    CHECK(run("sudoku 11" + std::string(79, '0')).status == 2);
    CHECK(run("sudoku").status == 2);

    // row 0 holds 1..7 and still needs an 8, but the 8 in its top-right box blocks both free cells
    auto stuck = std::string("1234567") + std::string(74, '0');
    stuck[16] = '8';
    auto none = Json::parse(run("sudoku " + stuck).out);
    CHECK(none["solutions"] == 0);
}

TEST_CASE("removing a given never lowers the solution count")
{
    auto puzzle = std::string("000000010400000000020000000000050407008000300001090000300400200050100000000806000");
    auto count = [] (const std::string & p) {
        auto s = Json::parse(run("sudoku " + p).out)["solutions"];
        return s.is_string() ? 2 : s.get<int>();
    };
    int base = count(puzzle);
    CHECK(base == 1);
    for (std::size_t i = 0 ; i < puzzle.size() ; ++i) {
        if (puzzle[i] == '0')
            continue;
        auto fewer = puzzle;
        fewer[i] = '0';
        CHECK(count(fewer) >= base);
    }
}

TEST_CASE("conjecture-scan")
{
    auto scan = run("conjecture-scan --max-n 4");
    CHECK(scan.status == 0);
    auto j = Json::parse(scan.out);
    CHECK(j["counterexamples"] == 0);
    CHECK(j["levels"][2]["connected_graphs"] == 6);
    CHECK(run("conjecture-scan --max-n 9").status == 2);
}

TEST_CASE("exit codes")
{
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("--help").status == 0);
    CHECK(run("chroma /nonexistent/graph.json").status == 2);
    CHECK(run("chroma -", "3 2\n0 1\n1 x\n").status == 2);
    CHECK(run("chroma -", "2 1\n0 0\n").status == 2);
    CHECK(run("chroma -", "3 1\n0 9\n").status == 2);
    CHECK(run("sn -", "4 2\n0 1\n2 3\n").status == 2);

    auto c9 = scratch("c9.json", run("gen --family cycle --n 9").out);
    auto budget = run("sn " + c9 + " --budget-subsets 5");
    CHECK(budget.status == 1);
    auto j = Json::parse(budget.out);
    CHECK(j["error"] == "BudgetExceeded");
    CHECK(j["proven_lower_bound"] == 2);
    std::mt19937_64 rng(1);
    auto dense = serialize_graph(oracle::random_graph(rng, 40, 0.5), GraphFormat::EdgeList);
    CHECK(run("chroma --budget-nodes 1", dense).status == 1);
    CHECK(run("chroma", dense).status == 0);

    auto k3 = scratch("k3x.json", run("gen --family complete --n 3").out);
    CHECK(run("extend-count " + k3 + " --coloring " + scratch("bad.json", "{\"k\":3,\"colors\":{\"0\":7}}")).status == 2);
    CHECK(run("extend-count " + k3 + " --coloring " + scratch("trunc.json", "{\"k\":3,")).status == 2);
}
