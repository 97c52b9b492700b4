#include <icf/extremal.hpp>
#include <icf/errors.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace icf
{
    auto DesignParams::for_levi(PrimeModulus q) -> DesignParams
    {
        auto v = q.value();
        return { v * v + v + 1, v + 1, 1 };
    }

    namespace
    {
        auto require_bipartite(const Graph & g, const char * what) -> void
        {
            if (! g.is_bipartite_flagged())
                throw InvalidArgument(std::string(what) + " requires a bipartite graph (side_p_size > 0)");
        }

        auto require_even(std::size_t k, const char * what) -> void
        {
            if (k < 2 || k % 2 != 0)
                throw InvalidArgument(std::string(what) + " is defined for even k >= 2 only, got k = "
                        + std::to_string(k));
        }
    }

    auto side_profile(const Graph & g, const VertexSet & s) -> SideProfile
    {
        require_bipartite(g, "side_profile");
        if (s.universe() != g.n())
            throw InvalidVertex("vertex set universe does not match graph");
        auto a = intersection_count(s, g.side_p());
        return { a, s.count() - a };
    }

    auto check_expansion(const Graph & g, const DesignParams & params, const VertexSet & s) -> ExpansionCheck
    {
        require_bipartite(g, "check_expansion");
        if (s.universe() != g.n())
            throw InvalidVertex("vertex set universe does not match graph");
        if (s.empty())
            throw InvalidArgument("check_expansion requires a nonempty set");
        auto profile = side_profile(g, s);
        if (profile.a != 0 && profile.b != 0)
            throw InvalidArgument("check_expansion requires a set inside one side");

        std::uint64_t size = s.count();
        auto neighbourhood = neighborhood_of_set(g, s).count();
        Rational bound(BigInt(params.delta) * params.delta * size,
                BigInt(params.delta) + BigInt(params.lambda) * (size - 1));
        Rational observed(neighbourhood);
        return { neighbourhood, bound, observed >= bound, observed == bound };
    }

    auto sweep_expansion(const Graph & g, const DesignParams & params, std::size_t exhaustive_size,
            std::uint64_t random_sets, std::uint64_t seed, Budget * budget) -> ExpansionSweep
    {
        require_bipartite(g, "sweep_expansion");
        ExpansionSweep sweep;

        auto record = [&] (const VertexSet & s, std::size_t side_size) {
            if (budget)
                budget->charge();
            auto check = check_expansion(g, params, s);
            ++sweep.checked;
            if (! check.holds) {
                ++sweep.violations;
                if (! sweep.first_violation)
                    sweep.first_violation = s.members();
            }
            auto size = s.count();
            if (size == 1 && ! check.tight)
                sweep.singletons_tight = false;
            if (size == side_size && ! check.tight)
                sweep.full_sides_tight = false;
        };

        std::vector<std::vector<Vertex>> sides(2);
        for (Vertex v = 0 ; v < g.n() ; ++v)
            sides[g.in_side_p(v) ? 0 : 1].push_back(v);

        for (auto & side : sides) {
            if (side.empty())
                continue;
            VertexSet current(g.n());
            auto recurse = [&] (auto & self, std::size_t from, std::size_t depth) -> void {
                for (auto i = from ; i < side.size() ; ++i) {
                    current.insert(side[i]);
                    record(current, side.size());
                    if (depth + 1 < exhaustive_size)
                        self(self, i + 1, depth + 1);
                    current.erase(side[i]);
                }
            };
            recurse(recurse, 0, 0);
            if (side.size() > exhaustive_size)
                record(VertexSet(g.n(), side), side.size());
        }

        std::mt19937_64 rng(seed);
        std::vector<std::size_t> eligible;
        for (std::size_t i = 0 ; i < 2 ; ++i)
            if (sides[i].size() > exhaustive_size)
                eligible.push_back(i);
        if (! eligible.empty())
            for (std::uint64_t r = 0 ; r < random_sets ; ++r) {
                auto side = sides[eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)]];
                auto size = std::uniform_int_distribution<std::size_t>(exhaustive_size + 1, side.size())(rng);
                std::shuffle(side.begin(), side.end(), rng);
                record(VertexSet(g.n(), std::span<const Vertex>(side.data(), size)), side.size());
            }

        return sweep;
    }

    auto max_side_product(const Graph & g, Budget * budget) -> SideProductResult
    {
        require_bipartite(g, "max_side_product");
        SideProductResult best;
        bool found = false;
        auto side_p = g.side_p();
        for_each_maximal_independent_set(g, [&] (const VertexSet & s) {
                auto a = intersection_count(s, side_p);
                SideProfile profile{ a, s.count() - a };
                auto product = profile.product();
                if (! found || product > best.product
                        || (product == best.product && lexicographic_less(s, best.witness_set))) {
                    best = { product, profile, s };
                    found = true;
                }
                return Visit::proceed;
            }, budget);
        return best;
    }

    auto product_bound(PrimeModulus q) -> std::uint64_t
    {
        auto v = q.value();
        return v * (v + 1) * (v + 1);
    }

    namespace
    {
        class BalancedCounter
        {
            public:
                BalancedCounter(const Graph & g, std::size_t half, Budget * budget) :
                    _g(g), _half(half), _budget(budget), _side_l(g.n() - g.side_p_size()),
                    _unions(half + 1, VertexSet(g.n()))
                {
                    for (std::size_t free = 0 ; free <= _side_l ; ++free)
                        _choices.push_back(binomial(free, half));
                }

                auto count_from(Vertex first) -> BigInt
                {
                    _total = 0;
                    _unions[1] = _g.neighbours(first);
                    extend(1, first);
                    return _total;
                }

            private:
                const Graph & _g;
                std::size_t _half;
                Budget * _budget;
                std::size_t _side_l;
                std::vector<VertexSet> _unions;
                std::vector<BigInt> _choices;
                BigInt _total;

                // _unions[depth] is N(A) for the current depth-element subset A of P, whose
                // largest member is last.
                auto extend(std::size_t depth, Vertex last) -> void
                {
                    if (depth == _half) {
                        if (_budget)
                            _budget->charge();
                        _total += _choices[_side_l - _unions[depth].count()];
                        return;
                    }
                    for (Vertex v = last + 1 ; v + (_half - depth) <= _g.side_p_size() ; ++v) {
                        _unions[depth + 1] = _unions[depth];
                        _unions[depth + 1] |= _g.neighbours(v);
                        extend(depth + 1, v);
                    }
                }
        };
    }

    auto count_balanced(const Graph & g, std::size_t k, Budget * budget, unsigned workers) -> BigInt
    {
        require_even(k, "count_balanced");
        require_bipartite(g, "count_balanced");

        auto half = k / 2;
        auto side_p = g.side_p_size();
        if (half > side_p || half > g.n() - side_p)
            return 0;

        workers = std::max(1u, workers);
        std::vector<BigInt> partial(workers);
        run_workers(workers, [&] (unsigned w) {
                BalancedCounter counter(g, half, budget);
                for (Vertex first = w ; first + half <= side_p ; first += workers)
                    partial[w] += counter.count_from(first);
            });

        BigInt total = 0;
        for (auto & c : partial)
            total += c;
        return total;
    }

    auto check_cover_capacity(const Graph & g, const VertexSet & i, std::size_t k) -> BigInt
    {
        require_even(k, "check_cover_capacity");
        require_bipartite(g, "check_cover_capacity");
        if (! is_independent(g, i))
            throw InvalidArgument("check_cover_capacity requires an independent set");
        auto profile = side_profile(g, i);
        return binomial(profile.a, k / 2) * binomial(profile.b, k / 2);
    }

    auto counting_lower_bound(const Graph & g, std::size_t k, Budget * budget, unsigned workers) -> CountingLowerBound
    {
        CountingLowerBound result;
        result.balanced_count = count_balanced(g, k, budget, workers);
        result.max_capacity = 0;
        auto side_p = g.side_p();
        for_each_maximal_independent_set(g, [&] (const VertexSet & s) {
                auto a = intersection_count(s, side_p);
                auto capacity = binomial(a, k / 2) * binomial(s.count() - a, k / 2);
                if (capacity > result.max_capacity)
                    result.max_capacity = capacity;
                return Visit::proceed;
            }, budget);
        if (result.max_capacity > 0)
            result.lower_bound = ceil_div(result.balanced_count, result.max_capacity);
        return result;
    }

    auto balanced_count_bound(std::uint64_t n, std::size_t k) -> Rational
    {
        Rational base(BigInt(n), BigInt(4) * k);
        Rational result = 1;
        for (std::size_t i = 0 ; i < k ; ++i)
            result *= base;
        return result;
    }

    auto cover_capacity_bound(std::uint64_t n, std::size_t k) -> double
    {
        auto kd = static_cast<double>(k);
        return std::pow(2.0, kd / 2.0) * std::pow(static_cast<double>(n), 3.0 * kd / 4.0);
    }

    auto covering_size_bound(std::uint64_t n, std::size_t k) -> double
    {
        auto kd = static_cast<double>(k);
        return std::pow(static_cast<double>(n), kd / 4.0) / std::pow(4.0 * std::sqrt(2.0) * kd, kd);
    }

    auto relative_margin(double observed, double bound) -> double
    {
        if (bound == 0.0)
            return observed == 0.0 ? 0.0 : -std::copysign(1.0, observed);
        return (bound - observed) / std::fabs(bound);
    }

    auto below_bound(double observed, double bound) -> bool
    {
        return relative_margin(observed, bound) >= bound_margin;
    }

    auto above_bound(double observed, double bound) -> bool
    {
        return -relative_margin(observed, bound) >= bound_margin;
    }

    auto evaluate_bounds(std::uint64_t q, std::size_t k, bool exact, Budget * budget, unsigned workers) -> BoundsReport
    {
        PrimeModulus modulus(q);
        if (k < 2 || k % 2 != 0)
            throw PreconditionError("the covering lower bound is stated for even k >= 2, got k = " + std::to_string(k));
        if (k > q)
            throw PreconditionError("the covering lower bound requires k <= q (got k = " + std::to_string(k)
                    + ", q = " + std::to_string(q) + ")");

        BoundsReport report;
        report.q = q;
        report.k = k;
        report.n = LeviIndexing(modulus).vertex_count();
        report.balanced_count_bound = balanced_count_bound(report.n, k);
        report.capacity_bound = cover_capacity_bound(report.n, k);
        report.theorem_bound = covering_size_bound(report.n, k);

        if (exact) {
            auto skeleton = counting_lower_bound(gen_levi(modulus), k, budget, workers);
            report.balanced_count = skeleton.balanced_count;
            report.max_capacity = skeleton.max_capacity;
            report.exact_cover_lower_bound = skeleton.lower_bound;
        }

        return report;
    }
}
