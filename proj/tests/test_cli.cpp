#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewpp/cli.hpp"
#include "skewpp/counting.hpp"
#include "skewpp/serialize.hpp"

using namespace skewpp;
using nlohmann::ordered_json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool starts_with(const std::string& text, const std::string& prefix) {
    return text.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

} // namespace

TEST_CASE("count prints a bare number in text format") {
    const CliResult r = run_cli({"count", "pg", "--n", "4", "--k", "1", "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "27\n");
    CHECK(r.err.empty());
    CHECK(run_cli({"count", "pg", "--n", "4", "--k", "1", "--m", "2", "--variant", "literal"})
              .out == "27\n");
    CHECK(run_cli({"count", "ps", "--n", "3", "--k", "2", "--m", "2"}).out == "6\n");
}

TEST_CASE("count emits structured formats") {
    ordered_json expected;
    expected["kind"] = "pg";
    expected["n"] = 4;
    expected["k"] = 1;
    expected["m"] = 2;
    expected["variant"] = "restricted";
    expected["count"] = "27";
    CHECK(run_cli({"count", "pg", "--n", "4", "--k", "1", "--m", "2", "--format", "json"}).out ==
          dump(expected));
    CHECK(run_cli({"count", "pg", "--n", "4", "--k", "1", "--m", "2", "--format", "csv"}).out ==
          "kind,n,k,m,variant,count\npg,4,1,2,restricted,27\n");
}

TEST_CASE("table prints entries in every format") {
    const CliResult text = run_cli({"table", "pg", "--n", "4", "--k", "1"});
    CHECK(text.code == 0);
    CHECK(text.out == "n=4 k=1 side=above entries=2\nj=0 l=0 count=31\nj=1 l=0 count=27\n");
    CHECK(run_cli({"table", "ps", "--n", "3", "--k", "2"}).out ==
          "n=3 k=2 side=below entries=2\nj=0 l=0 count=6\nj=1 l=0 count=6\n");
    CHECK(run_cli({"table", "pg", "--n", "4", "--k", "1", "--format", "json"}).out ==
          dump(to_json(pg_table(4, 1))));
    CHECK(starts_with(run_cli({"table", "pg", "--n", "6", "--k", "2", "--format", "csv"}).out,
                      "n,k,side,j,l,count\n6,2,above,0,0,253\n6,2,above,1,0,160\n"));
    CHECK(run_cli({"table", "pg", "--n", "2", "--k", "7"}).out ==
          "n=2 k=7 side=above entries=0\n");
}

TEST_CASE("table --oracle recomputes the same values the slow way") {
    const std::vector<std::string> fast{"table", "ps", "--n", "5", "--k", "2"};
    std::vector<std::string> slow = fast;
    slow.push_back("--oracle");
    CHECK(run_cli(fast).out == run_cli(slow).out);
}

TEST_CASE("stats reports the pivot profile of the worked filling") {
    const std::vector<std::string> base{"stats", "--shape", "5,4,4,3/2,1", "--filling",
                                        "9,7,5;4,3,2;5,3,3,1;5,3,2", "--k", "2"};
    const CliResult text = run_cli(base);
    CHECK(text.code == 0);
    CHECK(text.out == "k=2 present=true d_above=5 l_above=2 clean_below=true d_below=1 "
                      "l_below=0 clean_above=false\n");
    std::vector<std::string> csv = base;
    csv.insert(csv.end(), {"--format", "csv"});
    CHECK(run_cli(csv).out ==
          "k,present,d_above,l_above,clean_below,d_below,l_below,clean_above\n"
          "2,true,5,2,true,1,0,false\n");
    ordered_json expected;
    expected["k"] = 2;
    expected["present"] = true;
    expected["d_above"] = 5;
    expected["l_above"] = 2;
    expected["clean_below"] = true;
    expected["d_below"] = 1;
    expected["l_below"] = 0;
    expected["clean_above"] = false;
    std::vector<std::string> json = base;
    json.insert(json.end(), {"--format", "json"});
    CHECK(run_cli(json).out == dump(expected));
}

TEST_CASE("liftings lists each model's overlinings in canonical order") {
    const std::vector<std::string> base{"liftings", "--shape", "5,4,2,2,1/3,2", "--filling",
                                        "2,1;4,2;5,4;5,4;1"};
    CHECK(run_cli(base).out == "2~,1;4~,2~;5~,4~;5~,4~;1\n2~,1~;4~,2~;5~,4~;5~,4~;1~\n");
    std::vector<std::string> hybrid = base;
    hybrid.insert(hybrid.end(), {"--model", "hybrid"});
    CHECK(run_cli(hybrid).out == "2~,1;4~,2~;5~,4~;5~,4~;1\n"
                                 "2~,1~;4~,2~;5~,4~;5~,4~;1\n"
                                 "2~,1;4~,2~;5~,4~;5~,4~;1~\n"
                                 "2~,1~;4~,2~;5~,4~;5~,4~;1~\n");
    std::vector<std::string> occurrence = base;
    occurrence.insert(occurrence.end(), {"--model", "occurrence"});
    const std::string lines = run_cli(occurrence).out;
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 64);
}

TEST_CASE("pretty grids right-align values and indent inner offsets") {
    CHECK(run_cli({"fillings", "--shape", "2,1", "--weight", "3", "--pretty"}).out ==
          "1 1\n1\n");
    CHECK(starts_with(
        run_cli({"fillings", "--shape", "2,1/1", "--weight", "11", "--pretty"}).out,
        "   10\n 1\n\n  9\n2\n\n"));
    CHECK(run_cli({"liftings", "--shape", "5,4,2,2,1/3,2", "--filling",
                   "2,1;4,2;5,4;5,4;1", "--pretty"})
              .out == "         2~  1\n      4~ 2~\n5~ 4~\n5~ 4~\n 1\n"
                      "\n"
                      "         2~ 1~\n      4~ 2~\n5~ 4~\n5~ 4~\n1~\n");
}

TEST_CASE("shapes lists the inventory in enumeration order") {
    CHECK(run_cli({"shapes", "--max-outer", "2"}).out == "1\n2\n2/1\n1,1\n1,1/1\n");
    CHECK(run_cli({"shapes", "--max-outer", "2", "--format", "csv"}).out ==
          "shape,cells\n1,1\n2,2\n2/1,1\n\"1,1\",2\n\"1,1/1\",1\n");
    ordered_json expected;
    expected["max_outer"] = 2;
    expected["min_cells"] = 1;
    expected["max_cells"] = 2;
    expected["count"] = 5;
    expected["shapes"] = {"1", "2", "2/1", "1,1", "1,1/1"};
    CHECK(run_cli({"shapes", "--max-outer", "2", "--format", "json"}).out == dump(expected));
    CHECK(run_cli({"shapes", "--max-outer", "4", "--min-cells", "2", "--max-cells", "2"})
              .code == 0);
}

TEST_CASE("fillings respects the square-free filter") {
    CHECK(run_cli({"fillings", "--shape", "2,2/1", "--weight", "4"}).out == "2;1,1\n1;2,1\n");
    CHECK(run_cli({"fillings", "--shape", "2,2/1", "--weight", "4", "--format", "csv"}).out ==
          "filling\n\"2;1,1\"\n\"1;2,1\"\n");
    const CliResult filtered =
        run_cli({"fillings", "--shape", "2,2", "--weight", "4", "--square-free-only"});
    CHECK(filtered.code == 0);
    CHECK(filtered.out.empty());
}

TEST_CASE("identity sweeps succeed under the restricted reading") {
    const CliResult t1 = run_cli({"verify", "theorem1", "--max-n", "6"});
    CHECK(t1.code == 0);
    CHECK(starts_with(t1.out, "side=above variant=restricted max_n=6\n"));
    CHECK(ends_with(t1.out, "rows=91 mismatches=0\n"));
    const CliResult t2 = run_cli({"verify", "theorem2", "--max-n", "6"});
    CHECK(t2.code == 0);
    CHECK(starts_with(t2.out, "side=below variant=restricted max_n=6\n"));
    CHECK(ends_with(t2.out, "rows=91 mismatches=0\n"));
}

TEST_CASE("identity sweeps expose the literal reading's gap") {
    const CliResult r = run_cli({"verify", "theorem1", "--max-n", "5", "--variant", "literal"});
    CHECK(r.code == 1);
    CHECK(r.out.find("n=4 k=2 m=1 lhs=24 rhs=20 MISMATCH\n") != std::string::npos);
    CHECK(r.out.find("n=5 k=2 m=1 lhs=48 rhs=38 MISMATCH\n") != std::string::npos);
    CHECK(r.out.find("n=5 k=3 m=1 lhs=63 rhs=54 MISMATCH\n") != std::string::npos);
    CHECK(ends_with(r.out, "rows=55 mismatches=3\n"));
    const CliResult fast = run_cli(
        {"verify", "theorem1", "--max-n", "5", "--variant", "literal", "--fail-fast"});
    CHECK(fast.code == 1);
    CHECK(ends_with(fast.out,
                    "n=4 k=2 m=1 lhs=24 rhs=20 MISMATCH\nrows=19 mismatches=1\n"));
}

TEST_CASE("verify reports match their library serializations") {
    CHECK(run_cli({"verify", "theorem1", "--max-n", "2", "--format", "json"}).out ==
          dump(to_json(verify(Side::kAbove, 2, Variant::kRestricted))));
    CHECK(run_cli({"verify", "theorem1", "--max-n", "2", "--format", "csv"}).out ==
          to_csv(verify(Side::kAbove, 2, Variant::kRestricted)));
}

TEST_CASE("lemma sweep prints its summary line") {
    const CliResult r = run_cli({"verify", "lemma1", "--max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "max=12 checked=169 mismatches=0\n");
    CHECK(run_cli({"verify", "lemma1", "--max", "12", "--format", "csv"}).out ==
          "max,checked,mismatches\n12,169,0\n");
    CHECK(run_cli({"verify", "lemma1", "--max", "12", "--format", "json"}).out ==
          dump(to_json(verify_lemma1(12))));
}

TEST_CASE("model sweep prints its summary line") {
    const CliResult r = run_cli({"verify", "models", "--max-n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "max_n=6 fillings=842 square_free=832 blocked=10 mismatches=0\n");
    CHECK(run_cli({"verify", "models", "--max-n", "4", "--format", "csv"}).code == 0);
}

TEST_CASE("output does not depend on the worker count") {
    const CliResult one = run_cli({"verify", "theorem1", "--max-n", "6", "--workers", "1"});
    const CliResult eight = run_cli({"verify", "theorem1", "--max-n", "6", "--workers", "8"});
    CHECK(one.code == eight.code);
    CHECK(one.out == eight.out);
    CHECK(run_cli({"table", "pg", "--n", "6", "--k", "2", "--workers", "1"}).out ==
          run_cli({"table", "pg", "--n", "6", "--k", "2", "--workers", "8"}).out);
}

TEST_CASE("cache round-trips through the command line") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "skewpp_cli_cache";
    fs::remove_all(dir);
    const std::vector<std::string> args{"--cache-dir", dir.string(),
                                        "table", "pg", "--n", "4", "--k", "1"};
    const CliResult cold = run_cli(args);
    CHECK(cold.code == 0);
    CHECK(cold.err.empty());
    const fs::path file = dir / "table_n4_k1_above.json";
    REQUIRE(fs::exists(file));
    const CliResult warm = run_cli(args);
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);

    std::ofstream(file, std::ios::trunc) << "corrupted beyond recognition";
    const CliResult repaired = run_cli(args);
    CHECK(repaired.out == cold.out);
    // The damaged entry was recomputed and rewritten in valid form.
    std::ifstream in(file);
    const ordered_json doc = ordered_json::parse(in, nullptr, false);
    CHECK_FALSE(doc.is_discarded());
    CHECK(doc.contains("payload"));

    // The oracle path must never touch the cache.
    const CliResult oracle = run_cli({"--cache-dir", dir.string(), "table", "pg", "--n", "3",
                                      "--k", "1", "--oracle"});
    CHECK(oracle.code == 0);
    CHECK_FALSE(fs::exists(dir / "table_n3_k1_above.json"));
    fs::remove_all(dir);
}

TEST_CASE("bad invocations exit with the usage code") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"count", "pg", "--n", "4"}).code == 2);          // missing --k/--m
    CHECK(run_cli({"count", "pg", "--n", "0", "--k", "1", "--m", "1"}).code == 2);
    CHECK(run_cli({"verify", "theorem1", "--workers", "0"}).code == 2);
    CHECK(run_cli({"liftings", "--shape", "3", "--filling", "2,1", "--model", "bogus"}).code ==
          2);
    const CliResult bad_shape =
        run_cli({"stats", "--shape", "1,2", "--filling", "1;1", "--k", "1"});
    CHECK(bad_shape.code == 2);
    CHECK(starts_with(bad_shape.err, "error: "));
    const CliResult blocked = run_cli(
        {"liftings", "--shape", "2,2", "--filling", "1,1;1,1"});
    CHECK(blocked.code == 2);
    CHECK(starts_with(blocked.err, "error: "));
}

TEST_CASE("internal failures exit with the fault code") {
    const CliResult r = run_cli({"verify", "lemma1", "--max", "67"});
    CHECK(r.code == 3);
    CHECK(r.err.find("overflow") != std::string::npos);
}

TEST_CASE("help is printed on request") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage: skewpp") != std::string::npos);
    CHECK(run_cli({"count", "--help"}).code == 0);
}
