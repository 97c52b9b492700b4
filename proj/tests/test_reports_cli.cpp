#include "helpers.hpp"

#include <icf/cli.hpp>
#include <icf/errors.hpp>
#include <icf/family_io.hpp>
#include <icf/graph_io.hpp>
#include <icf/json_schema.hpp>
#include <icf/levi.hpp>
#include <icf/report.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace icf;
using nlohmann::json;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return { code, out.str(), err.str() };
    }

    class ScratchDir
    {
        public:
            ScratchDir() :
                _path(std::filesystem::temp_directory_path() / ("icf_cli_" + std::to_string(::getpid())))
            {
                std::filesystem::create_directories(_path);
            }

            ~ScratchDir() { std::filesystem::remove_all(_path); }

            auto file(const std::string & name) const -> std::string { return (_path / name).string(); }

        private:
            std::filesystem::path _path;
    };

    auto slurp(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }
}

TEST_CASE("schema validator")
{
    json schema = json::parse(R"({
        "type": "object",
        "required": ["a"],
        "additionalProperties": false,
        "properties": {
            "a": { "type": "integer", "minimum": 1 },
            "b": { "type": ["string", "null"], "pattern": "^[0-9]+$" },
            "c": { "type": "array", "items": { "enum": ["x", "y"] } }
        }
    })");

    CHECK(validate_json(json::parse(R"({"a": 1, "b": "12", "c": ["x"]})"), schema).empty());
    CHECK(validate_json(json::parse(R"({"a": 1, "b": null})"), schema).empty());
    CHECK(validate_json(json::parse(R"({"b": "1"})"), schema).size() == 1);
    CHECK(validate_json(json::parse(R"({"a": 0})"), schema).size() == 1);
    CHECK(validate_json(json::parse(R"({"a": 1.5})"), schema).size() == 1);
    CHECK(validate_json(json::parse(R"({"a": 1, "b": "1x"})"), schema).size() == 1);
    CHECK(validate_json(json::parse(R"({"a": 1, "z": 1})"), schema).size() == 1);
    auto errors = validate_json(json::parse(R"({"a": 1, "c": ["x", "q"]})"), schema);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("/c/1") != std::string::npos);
    CHECK(validate_json(json::parse("[]"), schema).size() == 1);

    CHECK(family_schema().is_object());
    CHECK(run_report_schema().is_object());
    CHECK(bounds_report_schema().is_object());
    CHECK(json::parse(family_schema_text()) == family_schema());
}

TEST_CASE("run reports")
{
    RunReport r;
    r.command = "verify";
    CHECK(r.outcome() == Outcome::pass);
    r.checks.push_back({ "a", "p", json{ { "equals", 1 } }, 1, std::nullopt, true, "" });
    CHECK(r.outcome() == Outcome::pass);
    r.checks.push_back({ "b", "p", json{ { "at_most", 1 } }, 2, -1.0, false, "too big" });
    CHECK(r.outcome() == Outcome::fail);
    CHECK(validate_json(r.to_json(), run_report_schema()).empty());
    r.error = "broken";
    CHECK(r.outcome() == Outcome::error);
    CHECK(r.to_json()["outcome"] == "error");
    CHECK(validate_json(r.to_json(), run_report_schema()).empty());

    auto j = r.to_json();
    j["checks"][0].erase("passed");
    CHECK_FALSE(validate_json(j, run_report_schema()).empty());
}

TEST_CASE("family documents round trip")
{
    auto fano = gen_levi(PrimeModulus(2));
    auto family = build_family_mc(fano, 2, 1e-3, 42);
    auto j = family_to_json(fano, family);
    CHECK(validate_json(j, family_schema()).empty());
    CHECK(j["graph_hash"] == graph_hash(fano));
    CHECK(j["p"] == "1/4");
    CHECK(j["t"] == 1020);
    CHECK(j["d"] == 3);

    auto doc = family_from_json(json::parse(dump_json(j)));
    CHECK(doc.method == "monte-carlo");
    CHECK(doc.k == 2);
    CHECK(doc.seed == 42u);
    CHECK(doc.p == Rational(1, 4));
    CHECK(doc.vertex_sets(fano) == family.sets);
    CHECK(dump_json(family_to_json(fano, family)) == dump_json(j));

    auto greedy = greedy_cover(fano, 2);
    auto gj = greedy_family_to_json(fano, 2, greedy);
    CHECK(validate_json(gj, family_schema()).empty());
    auto gdoc = family_from_json(gj);
    CHECK_FALSE(gdoc.delta);
    CHECK(gdoc.vertex_sets(fano) == greedy);

    auto bad = j;
    bad["sets"][0] = json::array({ 3, 1 });
    CHECK_THROWS_AS(family_from_json(bad).vertex_sets(fano), InvalidArgument);
    bad = j;
    bad["sets"][0] = json::array({ 99 });
    CHECK_THROWS_AS(family_from_json(bad).vertex_sets(fano), InvalidVertex);
    bad = j;
    bad["graph_hash"] = "xyz";
    CHECK_THROWS_AS(family_from_json(bad), InvalidArgument);
    bad = j;
    bad.erase("k");
    CHECK_THROWS_AS(family_from_json(bad), InvalidArgument);

    CHECK(big_to_json(BigInt(5)) == 5);
    CHECK(big_to_json(BigInt(1) << 70) == "1180591620717411303424");
}

TEST_CASE("cli exit codes")
{
    CHECK(run({ "gen", "--q", "4" }).code == exit_usage);
    CHECK(run({ "gen" }).code == exit_usage);
    CHECK(run({ "nosuch" }).code == exit_usage);
    CHECK(run({ }).code == exit_usage);
    CHECK(run({ "verify", "--q", "2", "--checks", "nosuch" }).code == exit_usage);
    CHECK(run({ "verify", "--in", "/nonexistent.g" }).code == exit_usage);
    CHECK(run({ "bounds", "--q", "2", "--k", "4" }).code == exit_usage);
    CHECK(run({ "bounds", "--q", "2", "--k", "4" }).err.find("k <= q") != std::string::npos);
    CHECK(run({ "bounds", "--q", "5", "--k", "3" }).code == exit_usage);

    auto g = run({ "gen", "--q", "3" });
    CHECK(g.code == exit_pass);
    CHECK(g.out == "26 52 13\n");

    auto budget = run({ "--budget", "10", "--no-timestamp", "verify", "--q", "3", "--checks", "product" });
    CHECK(budget.code == exit_budget);
    auto report = json::parse(budget.out);
    CHECK(report["outcome"] == "error");
    CHECK(validate_json(report, run_report_schema()).empty());
}

TEST_CASE("cli verify reports")
{
    auto r = run({ "--no-timestamp", "verify", "--q", "2", "--checks", "levi-props,c4free" });
    CHECK(r.code == exit_pass);
    auto j = json::parse(r.out);
    CHECK(validate_json(j, run_report_schema()).empty());
    CHECK(j["outcome"] == "pass");
    CHECK(j["checks"].size() == 6);

    auto all = run({ "--no-timestamp", "verify", "--q", "2", "--samples", "200",
            "--checks", "levi-props,c4free,degeneracy,expansion,product,balanced,coverbound" });
    CHECK(all.code == exit_pass);
    CHECK(validate_json(json::parse(all.out), run_report_schema()).empty());
    CHECK_FALSE(json::parse(all.out).contains("duration_ms"));

    ScratchDir dir;
    auto path = dir.file("c4.g");
    write_graph_file(testing::cycle(4), path);
    auto c4 = run({ "verify", "--in", path, "--checks", "c4free,degeneracy" });
    CHECK(c4.code == exit_check_failed);
    auto cj = json::parse(c4.out);
    CHECK(cj["outcome"] == "fail");
    CHECK(cj.contains("duration_ms"));
    CHECK(validate_json(cj, run_report_schema()).empty());

    CHECK(run({ "verify", "--in", path, "--checks", "levi-props" }).code == exit_usage);
}

TEST_CASE("cli degeneracy on a graph file")
{
    ScratchDir dir;
    auto path = dir.file("fano.g");
    REQUIRE(run({ "gen", "--q", "2", "--out", path }).code == exit_pass);
    CHECK(slurp(path).rfind("14 21 7\n", 0) == 0);

    auto r = run({ "--no-timestamp", "verify", "--in", path, "--checks", "degeneracy" });
    CHECK(r.code == exit_pass);
    auto j = json::parse(r.out);
    CHECK(j["checks"][0]["observed"] == 3);
    CHECK(j["checks"][0]["detail"] == "d = 3 <= ceil(sqrt(14)) = 4");
}

TEST_CASE("cli bounds")
{
    auto r = run({ "--no-timestamp", "bounds", "--q", "2", "--k", "2", "--exact" });
    CHECK(r.code == exit_pass);
    auto j = json::parse(r.out);
    CHECK(validate_json(j, bounds_report_schema()).empty());
    CHECK(j["balanced_count"] == 28);
    CHECK(j["max_capacity"] == 4);
    CHECK(j["exact_cover_lower_bound"] == 7);
    CHECK(j["balanced_count_bound"] == "49/16");

    auto far = run({ "--no-timestamp", "bounds", "--q", "101", "--k", "4" });
    CHECK(far.code == exit_pass);
    auto fj = json::parse(far.out);
    CHECK(validate_json(fj, bounds_report_schema()).empty());
    CHECK(fj["theorem_bound"].get<double>() == doctest::Approx(20606.0 / 262144));
    CHECK(fj["balanced_count"].is_null());
}

TEST_CASE("cli covering round trip")
{
    ScratchDir dir;
    auto graph = dir.file("fano.g"), fam = dir.file("fam.json"), fam3 = dir.file("fam3.json");
    auto greedy_out = dir.file("greedy.json"), other = dir.file("other.g");
    REQUIRE(run({ "gen", "--q", "2", "--out", graph }).code == exit_pass);

    auto b = run({ "--no-timestamp", "cover", "build", "--in", graph, "--k", "2", "--delta", "0.001",
            "--seed", "42", "--out", fam });
    CHECK(b.code == exit_pass);
    CHECK(b.err.find("from 1020 samples") != std::string::npos);
    CHECK(validate_json(json::parse(slurp(fam)), family_schema()).empty());

    auto v = run({ "--no-timestamp", "cover", "verify", "--in", graph, "--k", "2", "--family", fam });
    CHECK(v.code == exit_pass);
    CHECK(validate_json(json::parse(v.out), run_report_schema()).empty());

    REQUIRE(run({ "--workers", "3", "cover", "build", "--in", graph, "--k", "2", "--delta", "0.001",
            "--seed", "42", "--out", fam3 }).code == exit_pass);
    CHECK(slurp(fam) == slurp(fam3));
    auto stdout_build = run({ "cover", "build", "--in", graph, "--k", "2", "--delta", "0.001", "--seed", "42" });
    CHECK(stdout_build.out == slurp(fam));

    auto g = run({ "--no-timestamp", "cover", "greedy", "--in", graph, "--k", "2", "--out", greedy_out });
    CHECK(g.code == exit_pass);
    auto gj = json::parse(g.out);
    CHECK(validate_json(gj, run_report_schema()).empty());
    CHECK(json::parse(slurp(greedy_out))["sets"].size() >= 7);
    CHECK(run({ "cover", "verify", "--in", graph, "--family", greedy_out }).code == exit_pass);

    write_graph_file(gen_levi(PrimeModulus(3)), other);
    auto mismatch = run({ "cover", "verify", "--in", other, "--k", "2", "--family", fam });
    CHECK(mismatch.code == exit_usage);
    CHECK(mismatch.err.find("hash") != std::string::npos);

    CHECK(run({ "--budget", "10", "cover", "verify", "--in", graph, "--family", fam }).code == exit_budget);
    CHECK(run({ "--budget", "10", "cover", "build", "--in", graph, "--k", "2" }).code == exit_budget);

    // A family that misses sets fails with exit 1.
    auto partial = json::parse(slurp(fam));
    partial["sets"] = json::array({ partial["sets"][0] });
    std::ofstream(fam) << dump_json(partial);
    auto pv = run({ "--no-timestamp", "cover", "verify", "--in", graph, "--family", fam });
    CHECK(pv.code == exit_check_failed);
    CHECK(json::parse(pv.out)["outcome"] == "fail");
}
