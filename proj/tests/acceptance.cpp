// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "helpers.hpp"
#include "oracle.hpp"

#include <icf/cli.hpp>
#include <icf/covering.hpp>
#include <icf/errors.hpp>
#include <icf/extremal.hpp>
#include <icf/family_io.hpp>
#include <icf/graph_io.hpp>
#include <icf/levi.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace icf;

namespace
{
    const std::vector<std::uint64_t> structural_orders{ 2, 3, 5, 7, 11, 13 };

    // Collects failed conditions for one criterion, plus free-form notes.
    class Findings
    {
        public:
            auto require(bool condition, const std::string & what) -> void
            {
                if (! condition)
                    _failures.push_back(what);
            }

            auto note(const std::string & text) -> void { _notes.push_back(text); }

            auto ok() const -> bool { return _failures.empty(); }

            auto summary() const -> std::string
            {
                std::string result;
                for (auto & f : _failures)
                    result += (result.empty() ? "" : "; ") + ("failed: " + f);
                for (auto & n : _notes)
                    result += (result.empty() ? "" : "; ") + n;
                return result;
            }

        private:
            std::vector<std::string> _failures;
            std::vector<std::string> _notes;
    };

    auto structural_suite(Findings & f) -> void
    {
        for (auto q : structural_orders) {
            PrimeModulus m(q);
            auto g = gen_levi(m);
            auto r = verify_levi_properties(g, m);
            auto tag = "q=" + std::to_string(q);
            f.require(r.n_ok, tag + " vertex count");
            f.require(r.p_degree_ok, tag + " P degrees");
            f.require(r.p_common_ok, tag + " P common neighbours");
            f.require(r.l_degree_ok, tag + " L degrees");
            f.require(r.l_common_ok, tag + " L common neighbours");
            f.require(is_c4_free(g), tag + " C4-free");
        }
        f.note("q in {2,3,5,7,11,13}: five design properties and C4-freeness");
    }

    auto degeneracy_suite(Findings & f) -> void
    {
        for (auto q : structural_orders) {
            auto g = gen_levi(PrimeModulus(q));
            auto d = degeneracy_order(g).degeneracy;
            auto tag = "q=" + std::to_string(q);
            f.require(d == q + 1, tag + " degeneracy " + std::to_string(d) + " != q+1");
            f.require(d <= ceil_sqrt(g.n()), tag + " degeneracy above ceil(sqrt(n))");
        }

        auto g7 = gen_levi(PrimeModulus(7));
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> size_dist(10, g7.n());
        for (int trial = 0 ; trial < 100 ; ++trial) {
            std::vector<Vertex> all(g7.n());
            for (Vertex v = 0 ; v < g7.n() ; ++v)
                all[v] = v;
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(size_dist(rng));
            auto h = induced_subgraph(g7, VertexSet(g7.n(), all));
            auto d = degeneracy_order(h).degeneracy;
            f.require(h.n() >= 10, "subgraph smaller than 10 vertices");
            f.require(d <= ceil_sqrt(h.n()), "induced subgraph on " + std::to_string(h.n())
                    + " vertices has degeneracy " + std::to_string(d));
        }
        f.note("degeneracy q+1 for all q; 100 induced subgraphs of the q=7 graph within ceil(sqrt(n))");
    }

    auto expansion_suite(Findings & f) -> void
    {
        for (std::uint64_t q : { 2, 3 }) {
            PrimeModulus m(q);
            auto sweep = sweep_expansion(gen_levi(m), DesignParams::for_levi(m), 3, 10'000, 1000 + q);
            auto tag = "q=" + std::to_string(q);
            f.require(sweep.violations == 0, tag + " " + std::to_string(sweep.violations) + " violations");
            f.require(sweep.singletons_tight, tag + " singleton equality");
            f.require(sweep.full_sides_tight, tag + " full-side equality");
            f.note(tag + ": " + std::to_string(sweep.checked) + " sets checked");
        }
    }

    auto product_suite(Findings & f) -> void
    {
        for (std::uint64_t q : { 2, 3 }) {
            PrimeModulus m(q);
            auto r = max_side_product(gen_levi(m));
            f.require(r.product <= product_bound(m), "q=" + std::to_string(q) + " product "
                    + std::to_string(r.product) + " above " + std::to_string(product_bound(m)));
            f.note("q=" + std::to_string(q) + ": max a*b = " + std::to_string(r.product)
                    + " <= " + std::to_string(product_bound(m)));
        }

        auto fano = oracle::levi(2);
        auto brute = oracle::max_side_product(fano, 7);
        auto measured = max_side_product(testing::to_graph(fano, 7)).product;
        f.require(brute == 4, "oracle maximum " + std::to_string(brute) + " != 4");
        f.require(measured == brute, "maximal-set maximum differs from all-subset maximum");
    }

    auto balanced_suite(Findings & f) -> void
    {
        auto c2 = count_balanced(gen_levi(PrimeModulus(2)), 2);
        auto oracle2 = oracle::balanced_pairs(oracle::levi(2), 7);
        f.require(oracle2 == 7 * 7 - 21, "oracle pair count");
        f.require(c2 == oracle2, "q=2 count " + c2.str() + " != 28");
        f.require(Rational(c2) >= balanced_count_bound(14, 2), "q=2 count below 49/16");

        auto c3 = count_balanced(gen_levi(PrimeModulus(3)), 2);
        f.require(Rational(c3) >= balanced_count_bound(26, 2), "q=3 count below (26/8)^2");
        f.require(c3 == oracle::balanced_pairs(oracle::levi(3), 13), "q=3 count differs from oracle");

        try {
            Budget budget(Budget::default_steps);
            auto c5 = count_balanced(gen_levi(PrimeModulus(5)), 4, &budget);
            f.require(Rational(c5) >= balanced_count_bound(62, 4), "q=5 count below (62/16)^4");
            f.note("counts 28, " + c3.str() + ", " + c5.str() + " (q=5, k=4 bound "
                    + std::to_string(to_double(balanced_count_bound(62, 4))) + ")");
        }
        catch (const BudgetExceeded &) {
            f.note("q=5, k=4 skipped: step budget exceeded");
        }
    }

    auto capacity_suite(Findings & f) -> void
    {
        for (std::uint64_t q : { 2, 3 }) {
            auto g = gen_levi(PrimeModulus(q));
            auto bound = cover_capacity_bound(g.n(), 2);
            BigInt worst = 0;
            std::size_t sets = 0;
            for (auto & s : maximal_independent_sets(g)) {
                auto c = check_cover_capacity(g, s, 2);
                worst = std::max(worst, c);
                ++sets;
                f.require(below_bound(to_double(c), bound), "q=" + std::to_string(q) + " capacity " + c.str()
                        + " above " + std::to_string(bound));
            }
            f.note("q=" + std::to_string(q) + ": " + std::to_string(sets) + " maximal sets, max capacity "
                    + worst.str() + " <= " + std::to_string(bound));
        }
    }

    auto skeleton_suite(Findings & f) -> void
    {
        auto g = gen_levi(PrimeModulus(2));
        auto lower = counting_lower_bound(g, 2);
        f.require(lower.lower_bound && *lower.lower_bound == 7, "exact lower bound is not 7");

        auto greedy = greedy_cover(g, 2);
        f.require(greedy.size() >= 7, "greedy family smaller than 7");
        f.require(verify_family(g, 2, greedy).ok(), "greedy family fails verification");

        auto theorem = covering_size_bound(g.n(), 2);
        f.require(above_bound(7.0, theorem), "7 below theorem bound");
        f.note("lower bound 7, greedy " + std::to_string(greedy.size()) + ", theorem bound "
                + std::to_string(theorem));
    }

    auto sampler_suite(Findings & f) -> void
    {
        auto g = gen_levi(PrimeModulus(2));
        auto order = degeneracy_order(g);
        auto params = SamplerParams::for_degeneracy(order.degeneracy, 2);
        f.require(order.degeneracy == 3, "degeneracy is not 3");
        f.require(params.p == Rational(1, 4), "p is not 1/4");
        f.require(params.p_min == Rational(729, 65536), "p_min is not 729/65536");

        std::vector<VertexSet> pairs;
        for (auto & s : independent_sets(g, 2))
            if (s.count() == 2)
                pairs.push_back(s);
        f.require(pairs.size() == 70, "expected 70 independent pairs, got " + std::to_string(pairs.size()));

        const std::uint64_t samples = 100'000;
        IndependentSetSampler sampler(g, order, params.p);
        std::vector<std::uint64_t> hits(pairs.size(), 0);
        std::uint64_t dependent = 0;
        for (std::uint64_t i = 0 ; i < samples ; ++i) {
            auto rng = sample_stream(2024, i);
            auto s = sampler.draw(rng);
            if (! is_independent(g, s))
                ++dependent;
            for (std::size_t j = 0 ; j < pairs.size() ; ++j)
                if (pairs[j].is_subset_of(s))
                    ++hits[j];
        }
        f.require(dependent == 0, std::to_string(dependent) + " samples not independent");

        double p_min = 729.0 / 65536.0;
        double threshold = p_min - 3 * std::sqrt(p_min / samples);
        double lowest = 1.0;
        for (auto h : hits)
            lowest = std::min(lowest, double(h) / samples);
        f.require(lowest >= threshold, "lowest pair frequency " + std::to_string(lowest) + " below "
                + std::to_string(threshold));
        f.note("lowest pair frequency " + std::to_string(lowest) + " >= " + std::to_string(threshold));
    }

    auto end_to_end_suite(Findings & f) -> void
    {
        f.require(required_samples(84, Rational(729, 65536), 1e-3) == 1020, "required_samples != 1020");

        auto g = gen_levi(PrimeModulus(2));
        int passed = 0;
        for (std::uint64_t seed = 1 ; seed <= 20 ; ++seed) {
            auto family = build_family_mc(g, 2, 1e-3, seed);
            if (verify_family(g, 2, family.sets).ok())
                ++passed;
        }
        f.require(passed >= 19, "only " + std::to_string(passed) + " of 20 seeds verified");
        f.note(std::to_string(passed) + " of 20 seeds verified");
    }

    auto determinism_suite(Findings & f) -> void
    {
        for (auto q : structural_orders) {
            auto g = gen_levi(PrimeModulus(q));
            auto text = write_graph(g);
            auto h = parse_graph(text);
            f.require(h == g && write_graph(h) == text, "round trip q=" + std::to_string(q));
        }

        auto g = gen_levi(PrimeModulus(2));
        std::string reference;
        for (unsigned workers : { 1u, 2u, 4u, 7u }) {
            BuildOptions options;
            options.workers = workers;
            auto text = dump_json(family_to_json(g, build_family_mc(g, 2, 1e-3, 42, options)));
            if (reference.empty())
                reference = text;
            f.require(text == reference, "family differs with " + std::to_string(workers) + " workers");
        }

        auto path = std::filesystem::temp_directory_path() / "icf_acceptance_fano.g";
        write_graph_file(g, path);
        std::string cli_reference;
        for (std::string workers : { "1", "3" }) {
            std::ostringstream out, err;
            int code = run_cli({ "--no-timestamp", "--workers", workers, "cover", "build", "--in", path.string(),
                    "--k", "2", "--seed", "42" }, out, err);
            f.require(code == exit_pass, "cli build exit " + std::to_string(code));
            if (cli_reference.empty())
                cli_reference = out.str();
            f.require(out.str() == cli_reference, "cli family differs with --workers " + workers);
        }
        std::filesystem::remove(path);
        f.require(cli_reference == reference, "cli family differs from library family");
        f.note("round trip on 6 generated graphs; family identical across 1, 2, 4, 7 workers");
    }

    struct Criterion
    {
        int number;
        std::string title;
        double limit_seconds;
        std::function<void (Findings &)> body;
    };
}

auto main() -> int
{
    std::vector<Criterion> criteria{
        { 1, "incidence graph structure", 10, structural_suite },
        { 2, "degeneracy", 5, degeneracy_suite },
        { 3, "expansion", 30, expansion_suite },
        { 4, "side product bound", 60, product_suite },
        { 5, "balanced counting", 120, balanced_suite },
        { 6, "cover capacity", 60, capacity_suite },
        { 7, "counting skeleton", 30, skeleton_suite },
        { 8, "sampler correctness", 60, sampler_suite },
        { 9, "end-to-end covering", 120, end_to_end_suite },
        { 10, "determinism and IO", 10, determinism_suite }
    };

    int failures = 0;
    for (auto & c : criteria) {
        Findings findings;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(findings);
        }
        catch (const std::exception & e) {
            findings.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        findings.require(seconds < c.limit_seconds, "took " + std::to_string(seconds) + " s");

        bool ok = findings.ok();
        if (! ok)
            ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.title << ", "
            << std::fixed << std::setprecision(2) << seconds << " s): " << findings.summary() << std::endl;
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
