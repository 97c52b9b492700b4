#include <icf/covering.hpp>
#include <icf/errors.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <unordered_set>

namespace icf
{
    auto SamplerParams::for_degeneracy(std::size_t d, std::size_t k) -> SamplerParams
    {
        SamplerParams result;
        result.d = d;
        result.k = k;
        result.p = Rational(1, BigInt(d) + 1);
        Rational keep = 1 - result.p;
        result.p_min = 1;
        for (std::size_t i = 0 ; i < k ; ++i)
            result.p_min *= result.p;
        for (std::size_t i = 0 ; i < k * d ; ++i)
            result.p_min *= keep;
        return result;
    }

    auto sample_stream(std::uint64_t master_seed, std::uint64_t index) -> std::mt19937_64
    {
        std::uint64_t z = master_seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return std::mt19937_64(z);
    }

    IndependentSetSampler::IndependentSetSampler(const Graph & g, const DegeneracyResult & order, const Rational & p) :
        _n(g.n()),
        _forward(g.n())
    {
        if (p <= 0 || p > 1)
            throw InvalidArgument("marking probability must lie in (0, 1], got " + to_fraction_string(p));
        auto num = boost::multiprecision::numerator(p), den = boost::multiprecision::denominator(p);
        if (den > std::numeric_limits<std::uint64_t>::max())
            throw InvalidArgument("marking probability denominator does not fit in 64 bits");
        _num = num.convert_to<std::uint64_t>();
        _den = den.convert_to<std::uint64_t>();

        if (order.order.size() != g.n())
            throw InvalidArgument("vertex order does not cover the graph");
        std::vector<std::size_t> position(g.n(), g.n());
        for (std::size_t i = 0 ; i < order.order.size() ; ++i) {
            auto v = order.order[i];
            if (v >= g.n() || position[v] != g.n())
                throw InvalidArgument("vertex order is not a permutation");
            position[v] = i;
        }
        for (Vertex v = 0 ; v < g.n() ; ++v)
            for (auto w : g.neighbour_list(v))
                if (position[w] > position[v])
                    _forward[v].push_back(w);
    }

    auto IndependentSetSampler::draw(std::mt19937_64 & rng) const -> VertexSet
    {
        std::uniform_int_distribution<std::uint64_t> dist(0, _den - 1);
        VertexSet marked(_n);
        for (Vertex v = 0 ; v < _n ; ++v)
            if (dist(rng) < _num)
                marked.insert(v);

        VertexSet result = marked;
        marked.for_each([&] (Vertex v) {
                for (auto w : _forward[v])
                    if (marked.contains(w)) {
                        result.erase(v);
                        break;
                    }
            });
        return result;
    }

    auto sample_independent_set(const Graph & g, const DegeneracyResult & order, const Rational & p,
            std::mt19937_64 & rng) -> VertexSet
    {
        return IndependentSetSampler(g, order, p).draw(rng);
    }

    auto required_samples(const BigInt & universe, const Rational & p_min, double delta) -> std::uint64_t
    {
        if (universe < 1)
            throw InvalidArgument("universe size must be at least 1");
        if (! (delta > 0.0 && delta < 1.0))
            throw InvalidArgument("failure probability delta must lie in (0, 1)");
        if (p_min <= 0 || p_min > 1)
            throw InvalidArgument("per-sample probability must lie in (0, 1]");

        long double log_term = std::log(to_long_double(universe)) - std::log(static_cast<long double>(delta));
        long double samples = std::ceil(log_term / p_min.convert_to<long double>());
        if (! (samples < static_cast<long double>(std::numeric_limits<std::uint64_t>::max())))
            throw BudgetExceeded("required sample count does not fit in 64 bits");
        return static_cast<std::uint64_t>(samples);
    }

    auto build_family_mc(const Graph & g, std::size_t k, double delta, std::uint64_t seed,
            const BuildOptions & options) -> CoveringFamily
    {
        if (k == 0)
            throw InvalidArgument("covering families need k >= 1");

        if (options.c4_free_mode && ! is_c4_free(g))
            throw InvalidArgument("C4-free mode requested on a graph containing a 4-cycle");

        auto order = degeneracy_order(g);
        if (options.c4_free_mode && order.degeneracy > ceil_sqrt(g.n()))
            throw std::logic_error("C4-free graph with degeneracy " + std::to_string(order.degeneracy)
                    + " above ceil(sqrt(n)) = " + std::to_string(ceil_sqrt(g.n())));

        auto params = SamplerParams::for_degeneracy(order.degeneracy, k);

        CoveringFamily family;
        family.meta.seed = seed;
        family.meta.k = k;
        family.meta.degeneracy = order.degeneracy;
        family.meta.p = params.p;
        family.meta.p_min = params.p_min;
        family.meta.delta = delta;

        try {
            Budget budget(options.budget_steps);
            family.meta.universe = count_independent_sets(g, k, &budget, options.workers);
            family.meta.universe_exact = true;
        }
        catch (const BudgetExceeded &) {
            family.meta.universe = boost::multiprecision::pow(BigInt(g.n()), static_cast<unsigned>(k));
            family.meta.universe_exact = false;
        }

        if (family.meta.universe == 0) {
            family.meta.samples = 0;
            return family;
        }

        auto t = required_samples(family.meta.universe, params.p_min, delta);
        if (t > options.max_samples)
            throw BudgetExceeded("covering family needs " + std::to_string(t) + " samples, limit is "
                    + std::to_string(options.max_samples));
        family.meta.samples = t;

        IndependentSetSampler sampler(g, order, params.p);
        std::vector<VertexSet> drawn(t);
        auto workers = static_cast<unsigned>(std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(t, 1)));
        run_workers(workers, [&] (unsigned w) {
                auto begin = t * w / workers, end = t * (w + 1) / workers;
                for (auto i = begin ; i < end ; ++i) {
                    auto rng = sample_stream(seed, i);
                    drawn[i] = sampler.draw(rng);
                }
            });

        std::unordered_set<VertexSet, VertexSetHash> seen;
        for (auto & s : drawn)
            if (seen.insert(s).second)
                family.sets.push_back(std::move(s));

        return family;
    }

    namespace
    {
        // Walks one root's subtree, narrowing the list of members that contain
        // the current prefix. A prefix contained in no member is the root's
        // lexicographically first uncovered set.
        class CoverageSearch
        {
            public:
                CoverageSearch(const Graph & g, std::size_t k, std::span<const VertexSet> sets, Budget * budget) :
                    _g(g), _k(k), _sets(sets), _budget(budget), _alive(k + 1)
                {
                    _alive[0].resize(sets.size());
                    for (std::size_t i = 0 ; i < sets.size() ; ++i)
                        _alive[0][i] = i;
                }

                auto run(Vertex root) -> std::optional<std::vector<Vertex>>
                {
                    std::optional<std::vector<Vertex>> witness;
                    for_each_independent_set_from(_g, _k, root, [&] (std::span<const Vertex> current) {
                            ++_checked;
                            auto depth = current.size();
                            auto v = current.back();
                            auto & next = _alive[depth];
                            next.clear();
                            for (auto i : _alive[depth - 1])
                                if (_sets[i].contains(v))
                                    next.push_back(i);
                            if (next.empty()) {
                                witness.emplace(current.begin(), current.end());
                                return Visit::stop;
                            }
                            return Visit::proceed;
                        }, _budget);
                    return witness;
                }

                auto checked() const -> std::uint64_t { return _checked; }

            private:
                const Graph & _g;
                std::size_t _k;
                std::span<const VertexSet> _sets;
                Budget * _budget;
                std::vector<std::vector<std::size_t>> _alive;
                std::uint64_t _checked = 0;
        };
    }

    auto verify_family(const Graph & g, std::size_t k, std::span<const VertexSet> sets,
            Budget * budget, unsigned workers) -> CoverageResult
    {
        CoverageResult result;
        for (std::size_t i = 0 ; i < sets.size() ; ++i) {
            if (sets[i].universe() != g.n())
                throw InvalidVertex("family member " + std::to_string(i) + " is over a universe of size "
                        + std::to_string(sets[i].universe()) + ", graph has " + std::to_string(g.n()) + " vertices");
            if (! result.dependent_member && ! is_independent(g, sets[i]))
                result.dependent_member = i;
        }

        workers = std::max(1u, workers);
        std::vector<std::optional<std::vector<Vertex>>> witness_by_root(g.n());
        std::atomic<Vertex> first_failure{ g.n() };
        std::atomic<std::uint64_t> checked{ 0 };

        run_workers(workers, [&] (unsigned w) {
                CoverageSearch search(g, k, sets, budget);
                for (Vertex root = w ; root < g.n() ; root += workers) {
                    if (root > first_failure.load())
                        break;
                    if ((witness_by_root[root] = search.run(root))) {
                        auto current = first_failure.load();
                        while (root < current && ! first_failure.compare_exchange_weak(current, root))
                            ;
                        break;
                    }
                }
                checked += search.checked();
            });

        result.checked = checked;
        auto failed = first_failure.load();
        if (failed < g.n())
            result.uncovered = witness_by_root[failed];
        result.covered = ! result.uncovered.has_value();
        return result;
    }

    auto greedy_cover(const Graph & g, std::size_t k, Budget * budget) -> std::vector<VertexSet>
    {
        if (g.n() == 0 || k == 0)
            return { };

        std::map<std::vector<Vertex>, std::size_t> universe;
        for_each_independent_set(g, k, [&] (std::span<const Vertex> members) {
                universe.emplace(std::vector<Vertex>(members.begin(), members.end()), universe.size());
                return Visit::proceed;
            }, budget);

        auto candidates = maximal_independent_sets(g, budget);

        // Elements of the universe inside each candidate: all its nonempty subsets of size <= k.
        std::vector<std::vector<std::size_t>> contents(candidates.size());
        std::vector<std::vector<std::size_t>> holders(universe.size());
        for (std::size_t c = 0 ; c < candidates.size() ; ++c) {
            auto members = candidates[c].members();
            std::vector<Vertex> subset;
            auto recurse = [&] (auto & self, std::size_t from) -> void {
                for (auto i = from ; i < members.size() ; ++i) {
                    subset.push_back(members[i]);
                    if (budget)
                        budget->charge();
                    auto id = universe.at(subset);
                    contents[c].push_back(id);
                    holders[id].push_back(c);
                    if (subset.size() < k)
                        self(self, i + 1);
                    subset.pop_back();
                }
            };
            recurse(recurse, 0);
        }

        std::vector<std::size_t> gain(candidates.size());
        for (std::size_t c = 0 ; c < candidates.size() ; ++c)
            gain[c] = contents[c].size();
        std::vector<bool> covered(universe.size(), false);

        std::vector<VertexSet> result;
        std::size_t remaining = universe.size();
        while (remaining > 0) {
            auto best = static_cast<std::size_t>(std::max_element(gain.begin(), gain.end()) - gain.begin());
            if (gain[best] == 0)
                throw std::logic_error("greedy cover stalled with uncovered independent sets");
            result.push_back(candidates[best]);
            for (auto id : contents[best]) {
                if (covered[id])
                    continue;
                covered[id] = true;
                --remaining;
                for (auto c : holders[id])
                    --gain[c];
            }
        }
        return result;
    }
}
