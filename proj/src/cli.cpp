#include <icf/cli.hpp>
#include <icf/covering.hpp>
#include <icf/errors.hpp>
#include <icf/extremal.hpp>
#include <icf/family_io.hpp>
#include <icf/graph_io.hpp>
#include <icf/json_schema.hpp>
#include <icf/levi.hpp>
#include <icf/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace icf
{
    namespace
    {
        using nlohmann::json;
        using Clock = std::chrono::steady_clock;

        const std::vector<std::string> known_checks = {
            "levi-props", "c4free", "degeneracy", "expansion", "product", "balanced", "coverbound"
        };

        struct GlobalOptions
        {
            std::uint64_t budget = Budget::default_steps;
            unsigned workers = 1;
            bool no_timestamp = false;
        };

        auto elapsed_ms(Clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }

        auto split_list(const std::string & text) -> std::vector<std::string>
        {
            std::vector<std::string> result;
            std::stringstream in(text);
            std::string item;
            while (std::getline(in, item, ','))
                if (! item.empty())
                    result.push_back(item);
            return result;
        }

        auto at_most(const json & bound) -> json { return { { "at_most", bound } }; }
        auto at_least(const json & bound) -> json { return { { "at_least", bound } }; }
        auto equals(const json & value) -> json { return { { "equals", value } }; }

        auto range_json(std::uint64_t lo, std::uint64_t hi) -> json
        {
            if (lo > hi)
                return nullptr;
            return { { "min", lo }, { "max", hi } };
        }

        auto require_levi(const std::optional<PrimeModulus> & q, const std::string & check) -> PrimeModulus
        {
            if (! q)
                throw PreconditionError("check '" + check + "' needs a projective-plane incidence graph "
                        "(side_p_size = q^2 + q + 1 for a prime q, n = 2 side_p_size)");
            return *q;
        }

        auto require_even_k(std::size_t k, PrimeModulus q, const std::string & check) -> void
        {
            if (k < 2 || k % 2 != 0)
                throw PreconditionError("check '" + check + "' needs an even k >= 2, got " + std::to_string(k));
            if (k > q.value())
                throw PreconditionError("check '" + check + "' needs k <= q (got k = " + std::to_string(k)
                        + ", q = " + std::to_string(q.value()) + ")");
        }

        auto write_output(const std::string & text, const std::string & path, std::ostream & out) -> void
        {
            if (path.empty()) {
                out << text;
                return;
            }
            std::ofstream file(path, std::ios::binary);
            if (! file)
                throw InvalidArgument("cannot open " + path + " for writing");
            file << text;
        }

        auto run_checks(const Graph & g, const std::optional<PrimeModulus> & q, const std::vector<std::string> & checks,
                std::size_t k, std::uint64_t random_sets, std::uint64_t seed, const GlobalOptions & global,
                RunReport & report, std::ostream & err) -> void
        {
            Budget budget(global.budget);

            for (auto & check : checks) {
                if (check == "levi-props") {
                    auto modulus = require_levi(q, check);
                    auto r = verify_levi_properties(g, modulus);
                    report.checks.push_back({ "levi-props.vertex-count", "vertex-count",
                            equals(r.expected_n), r.observed_n, std::nullopt, r.n_ok, "" });
                    report.checks.push_back({ "levi-props.p-degree", "point-degree",
                            equals(r.expected_degree), range_json(r.p_degree_min, r.p_degree_max), std::nullopt, r.p_degree_ok, "" });
                    report.checks.push_back({ "levi-props.p-common", "point-pair-common-neighbours",
                            equals(1), range_json(r.p_common_min, r.p_common_max), std::nullopt, r.p_common_ok, "" });
                    report.checks.push_back({ "levi-props.l-degree", "line-degree",
                            equals(r.expected_degree), range_json(r.l_degree_min, r.l_degree_max), std::nullopt, r.l_degree_ok, "" });
                    report.checks.push_back({ "levi-props.l-common", "line-pair-common-neighbours",
                            equals(1), range_json(r.l_common_min, r.l_common_max), std::nullopt, r.l_common_ok, "" });
                    err << "levi-props: " << (r.all_ok() ? "all five properties hold" : "FAILED") << "\n";
                }
                else if (check == "c4free") {
                    bool free = is_c4_free(g);
                    report.checks.push_back({ "c4free", "c4-free", equals(true), free, std::nullopt, free, "" });
                    err << "c4free: " << (free ? "no 4-cycle" : "contains a 4-cycle") << "\n";
                }
                else if (check == "degeneracy") {
                    auto d = degeneracy_order(g).degeneracy;
                    auto bound = ceil_sqrt(g.n());
                    std::ostringstream detail;
                    detail << "d = " << d << (d <= bound ? " <= " : " > ") << "ceil(sqrt(" << g.n() << ")) = " << bound;
                    report.checks.push_back({ "degeneracy", "c4-free-degeneracy", at_most(bound), d,
                            relative_margin(static_cast<double>(d), static_cast<double>(bound)), d <= bound, detail.str() });
                    err << "degeneracy: " << detail.str() << "\n";
                }
                else if (check == "expansion") {
                    auto modulus = require_levi(q, check);
                    auto sweep = sweep_expansion(g, DesignParams::for_levi(modulus), 3, random_sets, seed, &budget);
                    json observed = { { "checked", sweep.checked }, { "violations", sweep.violations } };
                    if (sweep.first_violation)
                        observed["first_violation"] = *sweep.first_violation;
                    report.checks.push_back({ "expansion", "neighbourhood-expansion",
                            equals("|N(S)| >= (q+1)^2 |S| / (q + |S|)"), observed, std::nullopt, sweep.violations == 0, "" });
                    report.checks.push_back({ "expansion.equality", "neighbourhood-expansion-tight",
                            equals("equality for singletons and full sides"),
                            { { "singletons", sweep.singletons_tight }, { "full_sides", sweep.full_sides_tight } },
                            std::nullopt, sweep.singletons_tight && sweep.full_sides_tight, "" });
                    err << "expansion: " << sweep.checked << " sets, " << sweep.violations << " violations\n";
                }
                else if (check == "product") {
                    auto modulus = require_levi(q, check);
                    auto result = max_side_product(g, &budget);
                    auto bound = product_bound(modulus);
                    json observed = { { "max_product", result.product }, { "a", result.witness.a }, { "b", result.witness.b } };
                    report.checks.push_back({ "product", "side-product-bound", at_most(bound), observed,
                            relative_margin(static_cast<double>(result.product), static_cast<double>(bound)),
                            result.product <= bound, "" });
                    auto n_form = 2.0 * std::pow(static_cast<double>(g.n()), 1.5);
                    report.checks.push_back({ "product.n-form", "side-product-bound-n", at_most(n_form), result.product,
                            relative_margin(static_cast<double>(result.product), n_form),
                            below_bound(static_cast<double>(result.product), n_form), "" });
                    err << "product: max a*b = " << result.product << " (bound " << bound << ")\n";
                }
                else if (check == "balanced") {
                    auto modulus = require_levi(q, check);
                    require_even_k(k, modulus, check);
                    auto count = count_balanced(g, k, &budget, global.workers);
                    auto bound = balanced_count_bound(g.n(), k);
                    auto margin = to_double((Rational(count) - bound) / bound);
                    report.checks.push_back({ "balanced", "balanced-count", at_least(to_fraction_string(bound)),
                            big_to_json(count), margin, Rational(count) >= bound, "" });
                    err << "balanced: " << count << " balanced independent sets (bound " << to_double(bound) << ")\n";
                }
                else if (check == "coverbound") {
                    auto modulus = require_levi(q, check);
                    require_even_k(k, modulus, check);
                    BigInt max_capacity = 0;
                    for_each_maximal_independent_set(g, [&] (const VertexSet & s) {
                            auto c = check_cover_capacity(g, s, k);
                            if (c > max_capacity)
                                max_capacity = c;
                            return Visit::proceed;
                        }, &budget);
                    auto bound = cover_capacity_bound(g.n(), k);
                    auto observed = to_long_double(max_capacity);
                    report.checks.push_back({ "coverbound", "cover-capacity", at_most(bound), big_to_json(max_capacity),
                            relative_margin(static_cast<double>(observed), bound),
                            below_bound(static_cast<double>(observed), bound), "" });
                    err << "coverbound: max capacity " << max_capacity << " (bound " << bound << ")\n";
                }
            }
        }

        auto finish_report(RunReport & report, const GlobalOptions & global, Clock::time_point start,
                std::ostream & out) -> int
        {
            if (! global.no_timestamp)
                report.duration_ms = elapsed_ms(start);
            out << dump_json(report.to_json());
            switch (report.outcome()) {
                case Outcome::pass:  return exit_pass;
                case Outcome::fail:  return exit_check_failed;
                case Outcome::error: return exit_budget;
            }
            return exit_check_failed;
        }

        auto bounds_json(const BoundsReport & r) -> json
        {
            auto optional_big = [] (const std::optional<BigInt> & v) { return v ? big_to_json(*v) : json(nullptr); };
            json result = {
                { "q", r.q },
                { "k", r.k },
                { "n", r.n },
                { "exact", r.balanced_count.has_value() },
                { "balanced_count_bound", to_fraction_string(r.balanced_count_bound) },
                { "balanced_count_bound_value", to_double(r.balanced_count_bound) },
                { "capacity_bound", r.capacity_bound },
                { "theorem_bound", r.theorem_bound },
                { "balanced_count", optional_big(r.balanced_count) },
                { "max_capacity", optional_big(r.max_capacity) },
                { "exact_cover_lower_bound", optional_big(r.exact_cover_lower_bound) },
                { "checks", json::array() }
            };

            if (r.balanced_count) {
                Rational count(*r.balanced_count);
                result["checks"].push_back(to_json(CheckRecord{ "balanced-count", "balanced-count",
                        at_least(to_fraction_string(r.balanced_count_bound)), big_to_json(*r.balanced_count),
                        to_double((count - r.balanced_count_bound) / r.balanced_count_bound),
                        count >= r.balanced_count_bound, "" }));

                auto capacity = static_cast<double>(to_long_double(*r.max_capacity));
                result["checks"].push_back(to_json(CheckRecord{ "cover-capacity", "cover-capacity",
                        at_most(r.capacity_bound), big_to_json(*r.max_capacity),
                        relative_margin(capacity, r.capacity_bound), below_bound(capacity, r.capacity_bound), "" }));

                if (r.exact_cover_lower_bound) {
                    auto lower = static_cast<double>(to_long_double(*r.exact_cover_lower_bound));
                    result["checks"].push_back(to_json(CheckRecord{ "counting-skeleton", "covering-size-lower-bound",
                            at_least(r.theorem_bound), big_to_json(*r.exact_cover_lower_bound),
                            -relative_margin(lower, r.theorem_bound), above_bound(lower, r.theorem_bound), "" }));
                }
            }
            return result;
        }

        auto hash_mismatch(const Graph & g, const FamilyDocument & doc, std::ostream & err) -> bool
        {
            auto hash = graph_hash(g);
            if (hash == doc.graph_hash)
                return false;
            err << "error: graph hash mismatch: family was built for graph " << doc.graph_hash << ", input graph is " << hash << "\n";
            return true;
        }

        auto read_family(const std::string & path) -> FamilyDocument
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw InvalidArgument("cannot open family file " + path);
            json document;
            try {
                document = json::parse(in);
            }
            catch (const json::parse_error & e) {
                throw InvalidArgument("family file " + path + " is not valid JSON: " + e.what());
            }
            return family_from_json(document);
        }

        auto coverage_checks(const CoverageResult & coverage, std::size_t k, RunReport & report) -> void
        {
            json observed = { { "checked", coverage.checked } };
            if (coverage.uncovered)
                observed["first_uncovered"] = *coverage.uncovered;
            report.checks.push_back({ "coverage", "k-independence-covering", equals(true), observed, std::nullopt,
                    coverage.covered, coverage.covered ? "" : "an independent set of size <= " + std::to_string(k)
                        + " lies in no member" });
            json dependent = coverage.dependent_member ? json(*coverage.dependent_member) : json(nullptr);
            report.checks.push_back({ "independence", "members-independent", equals(nullptr),
                    { { "first_dependent_member", dependent } }, std::nullopt, ! coverage.dependent_member, "" });
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Projective-plane incidence graphs and independence covering families" };
        app.require_subcommand(1);
        app.fallthrough();

        GlobalOptions global;
        app.add_option("--budget", global.budget, "enumeration step budget")->capture_default_str();
        app.add_option("--workers", global.workers, "worker threads for enumeration and sampling")
            ->capture_default_str()->check(CLI::Range(1u, 1024u));
        app.add_flag("--no-timestamp", global.no_timestamp, "omit wall-clock fields from JSON output");

        std::uint64_t q = 0;
        std::string in_path, out_path, family_path, checks_text = "levi-props,c4free,degeneracy";
        std::size_t k = 2;
        std::uint64_t seed = 0, random_sets = 10'000;
        double delta = 1e-3;
        bool exact = false, c4_free_mode = false;

        auto gen = app.add_subcommand("gen", "write the incidence graph of the projective plane over Z_q");
        gen->add_option("--q", q, "prime order")->required();
        gen->add_option("--out", out_path, "output edge-list file");

        auto verify = app.add_subcommand("verify", "check structural and extremal properties of a graph");
        auto verify_in = verify->add_option("--in", in_path, "input edge-list file");
        auto verify_q = verify->add_option("--q", q, "generate the incidence graph for this prime instead");
        verify_in->excludes(verify_q);
        verify->add_option("--checks", checks_text, "comma-separated checks")->capture_default_str();
        verify->add_option("--k", k, "even set size for balanced and coverbound")->capture_default_str();
        verify->add_option("--samples", random_sets, "random larger sets for expansion")->capture_default_str();
        verify->add_option("--seed", seed, "seed for random expansion sets")->capture_default_str();

        auto bounds = app.add_subcommand("bounds", "evaluate the covering lower bound chain");
        bounds->add_option("--q", q, "prime order")->required();
        bounds->add_option("--k", k, "even set size, k <= q")->required();
        bounds->add_flag("--exact", exact, "also measure the exact counting skeleton");

        auto cover = app.add_subcommand("cover", "build and check k-independence covering families");
        cover->require_subcommand(1);
        cover->fallthrough();

        auto build = cover->add_subcommand("build", "Monte Carlo covering family");
        build->add_option("--in", in_path, "input edge-list file")->required();
        build->add_option("--k", k, "covered set size")->required();
        build->add_option("--delta", delta, "failure probability")->capture_default_str();
        build->add_option("--seed", seed, "master seed")->capture_default_str();
        build->add_option("--out", out_path, "family JSON output (stdout when absent)");
        build->add_flag("--c4free", c4_free_mode, "require a C4-free input and check the degeneracy bound");

        std::optional<std::size_t> verify_k;
        auto cover_verify = cover->add_subcommand("verify", "exact coverage check of a family file");
        cover_verify->add_option("--in", in_path, "input edge-list file")->required();
        cover_verify->add_option("--family", family_path, "family JSON file")->required();
        cover_verify->add_option("--k", verify_k, "covered set size (default: the family's k)");

        auto greedy = cover->add_subcommand("greedy", "greedy covering by maximal independent sets");
        greedy->add_option("--in", in_path, "input edge-list file")->required();
        greedy->add_option("--k", k, "covered set size")->required();
        greedy->add_option("--out", out_path, "family JSON output");

        std::vector<std::string> storage{ "icf" };
        storage.insert(storage.end(), args.begin(), args.end());
        std::vector<char *> argv;
        for (auto & s : storage)
            argv.push_back(s.data());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_pass : exit_usage;
        }

        auto start = Clock::now();
        try {
            if (*gen) {
                auto g = gen_levi(PrimeModulus(q));
                if (! out_path.empty())
                    write_graph_file(g, out_path);
                out << g.n() << ' ' << g.m() << ' ' << g.side_p_size() << '\n';
                return exit_pass;
            }

            if (*verify) {
                auto checks = split_list(checks_text);
                for (auto & c : checks)
                    if (std::find(known_checks.begin(), known_checks.end(), c) == known_checks.end()) {
                        err << "error: unknown check '" << c << "'\n";
                        return exit_usage;
                    }
                if (in_path.empty() && q == 0) {
                    err << "error: verify needs --in or --q\n";
                    return exit_usage;
                }

                std::optional<PrimeModulus> modulus;
                Graph g;
                if (in_path.empty()) {
                    modulus = PrimeModulus(q);
                    g = gen_levi(*modulus);
                }
                else {
                    g = read_graph_file(in_path);
                    modulus = infer_levi_order(g);
                }

                RunReport report;
                report.command = "verify";
                report.parameters = { { "checks", checks }, { "k", k }, { "samples", random_sets }, { "seed", seed } };
                if (in_path.empty())
                    report.parameters["q"] = q;
                else
                    report.parameters["in"] = in_path;

                try {
                    run_checks(g, modulus, checks, k, random_sets, seed, global, report, err);
                }
                catch (const BudgetExceeded & e) {
                    report.error = e.what();
                    err << "error: " << e.what() << "\n";
                }
                return finish_report(report, global, start, out);
            }

            if (*bounds) {
                Budget budget(global.budget);
                auto report = evaluate_bounds(q, k, exact, &budget, global.workers);
                auto document = bounds_json(report);
                if (! global.no_timestamp)
                    document["duration_ms"] = elapsed_ms(start);
                out << dump_json(document);
                err << "theorem bound " << report.theorem_bound;
                if (report.exact_cover_lower_bound)
                    err << ", exact counting bound " << *report.exact_cover_lower_bound;
                err << "\n";
                bool passed = std::all_of(document["checks"].begin(), document["checks"].end(),
                        [] (const json & c) { return c["passed"].get<bool>(); });
                return passed ? exit_pass : exit_check_failed;
            }

            if (*build) {
                auto g = read_graph_file(in_path);
                BuildOptions options;
                options.budget_steps = global.budget;
                options.max_samples = global.budget;
                options.workers = global.workers;
                options.c4_free_mode = c4_free_mode;
                auto family = build_family_mc(g, k, delta, seed, options);
                write_output(dump_json(family_to_json(g, family)), out_path, out);
                err << "family of " << family.sets.size() << " sets from " << family.meta.samples
                    << " samples (d = " << family.meta.degeneracy << ", p = " << to_fraction_string(family.meta.p) << ")\n";
                return exit_pass;
            }

            if (*cover_verify) {
                auto g = read_graph_file(in_path);
                auto doc = read_family(family_path);
                if (hash_mismatch(g, doc, err))
                    return exit_usage;
                auto sets = doc.vertex_sets(g);
                auto target = verify_k.value_or(doc.k);

                RunReport report;
                report.command = "cover verify";
                report.parameters = { { "in", in_path }, { "family", family_path }, { "k", target } };
                try {
                    Budget budget(global.budget);
                    auto coverage = verify_family(g, target, sets, &budget, global.workers);
                    coverage_checks(coverage, target, report);
                    err << (coverage.ok() ? "family covers" : "family does NOT cover") << " all independent sets of size <= "
                        << target << " (" << coverage.checked << " checked)\n";
                }
                catch (const BudgetExceeded & e) {
                    report.error = e.what();
                    err << "error: " << e.what() << "\n";
                }
                return finish_report(report, global, start, out);
            }

            if (*greedy) {
                auto g = read_graph_file(in_path);
                RunReport report;
                report.command = "cover greedy";
                report.parameters = { { "in", in_path }, { "k", k } };
                try {
                    Budget budget(global.budget);
                    auto sets = greedy_cover(g, k, &budget);
                    if (! out_path.empty())
                        write_output(dump_json(greedy_family_to_json(g, k, sets)), out_path, out);

                    auto coverage = verify_family(g, k, sets, &budget, global.workers);
                    coverage_checks(coverage, k, report);

                    auto modulus = infer_levi_order(g);
                    if (modulus && k >= 2 && k % 2 == 0 && k <= modulus->value()) {
                        auto skeleton = counting_lower_bound(g, k, &budget, global.workers);
                        if (skeleton.lower_bound) {
                            bool ok = BigInt(sets.size()) >= *skeleton.lower_bound;
                            report.checks.push_back({ "greedy-size", "covering-size-lower-bound",
                                    at_least(big_to_json(*skeleton.lower_bound)), sets.size(), std::nullopt, ok, "" });
                        }
                    }
                    else
                        report.checks.push_back({ "greedy-size", "covering-size", nullptr, sets.size(), std::nullopt, true,
                                "no counting lower bound for this graph and k" });
                    err << "greedy family of size " << sets.size() << "\n";
                }
                catch (const BudgetExceeded & e) {
                    report.error = e.what();
                    err << "error: " << e.what() << "\n";
                }
                return finish_report(report, global, start, out);
            }
        }
        catch (const BudgetExceeded & e) {
            err << "error: " << e.what() << "\n";
            return exit_budget;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }

        return exit_usage;
    }
}
