#pragma once

#include <icf/enumerate.hpp>
#include <icf/graph.hpp>
#include <icf/rational.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace icf
{
    /**
     * Per-sample guarantee of the degeneracy-order sampler: with marking
     * probability p = 1/(d+1), any fixed independent set of size <= k lands
     * inside the sample with probability at least
     *
     *     p_min = p^k (1 - p)^{k d}.
     */
    struct SamplerParams
    {
        std::size_t d = 0;
        std::size_t k = 0;
        Rational p;
        Rational p_min;

        static auto for_degeneracy(std::size_t d, std::size_t k) -> SamplerParams;
    };

    /**
     * Random generator for sample index i under a master seed.
     *
     * The substream seed is the splitmix64 finaliser applied to
     * master + (i + 1) * 0x9e3779b97f4a7c15, and it seeds a std::mt19937_64.
     * Marking decisions use std::uniform_int_distribution, so families are
     * reproducible for a given standard library, not across standard libraries.
     */
    auto sample_stream(std::uint64_t master_seed, std::uint64_t index) -> std::mt19937_64;

    /**
     * Marks each vertex independently with probability p, then keeps the
     * marked vertices none of whose later neighbours (in the given order) is
     * marked. The result is always independent.
     */
    class IndependentSetSampler
    {
        public:
            /// Requires 0 < p <= 1 and an order over exactly the vertices of g.
            IndependentSetSampler(const Graph & g, const DegeneracyResult & order, const Rational & p);

            auto draw(std::mt19937_64 & rng) const -> VertexSet;

        private:
            std::size_t _n;
            std::uint64_t _num, _den;
            std::vector<std::vector<Vertex>> _forward;
    };

    auto sample_independent_set(const Graph & g, const DegeneracyResult & order, const Rational & p,
            std::mt19937_64 & rng) -> VertexSet;

    /// ceil(ln(universe / delta) / p_min): enough samples that, by a union bound,
    /// some target set is missed with probability at most delta.
    auto required_samples(const BigInt & universe, const Rational & p_min, double delta) -> std::uint64_t;

    struct FamilyMeta
    {
        std::uint64_t seed = 0;
        std::uint64_t samples = 0;
        std::size_t k = 0;
        std::size_t degeneracy = 0;
        Rational p;
        Rational p_min;
        double delta = 0;
        BigInt universe;
        bool universe_exact = false;
    };

    struct CoveringFamily
    {
        std::vector<VertexSet> sets;
        FamilyMeta meta;
    };

    struct BuildOptions
    {
        /// Step budget for counting the target universe exactly; past it the
        /// universe size falls back to n^k.
        std::uint64_t budget_steps = Budget::default_steps;
        /// Throws BudgetExceeded when more samples would be needed.
        std::uint64_t max_samples = Budget::unlimited;
        unsigned workers = 1;
        /// Require a C4-free input and check the computed degeneracy against ceil(sqrt n).
        bool c4_free_mode = false;
    };

    /// Draws required_samples independent sets, deduplicates them keeping the
    /// first occurrence, and returns them in sample order. Deterministic in
    /// (g, k, delta, seed) whatever the worker count.
    auto build_family_mc(const Graph & g, std::size_t k, double delta, std::uint64_t seed,
            const BuildOptions & options = {}) -> CoveringFamily;

    struct CoverageResult
    {
        bool covered = false;
        /// Lexicographically first independent set of size <= k inside no member.
        std::optional<std::vector<Vertex>> uncovered;
        /// Index of the first member that is not an independent set.
        std::optional<std::size_t> dependent_member;
        std::uint64_t checked = 0;

        auto ok() const -> bool { return covered && ! dependent_member; }
    };

    /// Exact check against every independent set of size <= k. Throws
    /// BudgetExceeded rather than passing when the enumeration does not fit.
    auto verify_family(const Graph & g, std::size_t k, std::span<const VertexSet> sets,
            Budget * budget = nullptr, unsigned workers = 1) -> CoverageResult;

    /// Greedy set cover of the independent sets of size <= k by maximal
    /// independent sets, largest marginal gain first, ties to the
    /// lexicographically smallest candidate.
    auto greedy_cover(const Graph & g, std::size_t k, Budget * budget = nullptr) -> std::vector<VertexSet>;
}
