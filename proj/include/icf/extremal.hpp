#pragma once

#include <icf/enumerate.hpp>
#include <icf/graph.hpp>
#include <icf/levi.hpp>
#include <icf/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace icf
{
    /// Parameters of a bipartite graph with sides of size eta, regular degree
    /// delta, and exactly lambda common neighbours for every same-side pair.
    struct DesignParams
    {
        std::uint64_t eta;
        std::uint64_t delta;
        std::uint64_t lambda;

        static auto for_levi(PrimeModulus q) -> DesignParams;
    };

    struct SideProfile
    {
        std::size_t a = 0;   // members in P
        std::size_t b = 0;   // members in L

        auto product() const -> std::uint64_t { return std::uint64_t{a} * b; }
        auto operator==(const SideProfile &) const -> bool = default;
    };

    /// Requires a bipartite-flagged graph.
    auto side_profile(const Graph & g, const VertexSet & s) -> SideProfile;

    struct ExpansionCheck
    {
        std::size_t neighbourhood_size;
        Rational bound;     // delta^2 |S| / (delta + lambda (|S| - 1))
        bool holds;         // neighbourhood_size >= bound
        bool tight;         // neighbourhood_size == bound
    };

    /// Throws InvalidArgument when s is empty or not contained in a single side.
    auto check_expansion(const Graph & g, const DesignParams & params, const VertexSet & s) -> ExpansionCheck;

    struct ExpansionSweep
    {
        std::uint64_t checked = 0;
        std::uint64_t violations = 0;
        std::optional<std::vector<Vertex>> first_violation;
        /// Every singleton met the bound with equality.
        bool singletons_tight = true;
        /// Both full sides met the bound with equality.
        bool full_sides_tight = true;
    };

    /// check_expansion over every same-side set of size <= exhaustive_size, both
    /// full sides, and `random_sets` further same-side sets drawn by picking a
    /// side, then a size in (exhaustive_size, eta], then a uniform subset.
    auto sweep_expansion(const Graph & g, const DesignParams & params, std::size_t exhaustive_size,
            std::uint64_t random_sets, std::uint64_t seed, Budget * budget = nullptr) -> ExpansionSweep;

    struct SideProductResult
    {
        std::uint64_t product = 0;
        SideProfile witness;
        VertexSet witness_set;
    };

    /// Maximum a*b over maximal independent sets, which equals the maximum over
    /// all independent sets since extension never shrinks a or b. The witness is
    /// the first maximal set reaching the maximum in lexicographic order.
    auto max_side_product(const Graph & g, Budget * budget = nullptr) -> SideProductResult;

    /// q (q + 1)^2
    auto product_bound(PrimeModulus q) -> std::uint64_t;

    /// Exact number of independent sets with k/2 members on each side. For each
    /// (k/2)-subset A of P this adds C(|L \ N(A)|, k/2). Budget is charged once
    /// per subset of P.
    auto count_balanced(const Graph & g, std::size_t k, Budget * budget = nullptr, unsigned workers = 1) -> BigInt;

    /// C(a, k/2) * C(b, k/2) for the side profile (a, b) of i.
    auto check_cover_capacity(const Graph & g, const VertexSet & i, std::size_t k) -> BigInt;

    struct CountingLowerBound
    {
        BigInt balanced_count;
        BigInt max_capacity;
        /// ceil(balanced_count / max_capacity); absent when no independent set holds
        /// a balanced k-subset.
        std::optional<BigInt> lower_bound;
    };

    /// Every k-independence covering family of g has at least lower_bound
    /// members: the balanced independent sets must all be covered, and no single
    /// (maximal) independent set holds more than max_capacity of them.
    auto counting_lower_bound(const Graph & g, std::size_t k, Budget * budget = nullptr,
            unsigned workers = 1) -> CountingLowerBound;

    /// (n / 4k)^k
    auto balanced_count_bound(std::uint64_t n, std::size_t k) -> Rational;
    /// 2^{k/2} n^{3k/4}
    auto cover_capacity_bound(std::uint64_t n, std::size_t k) -> double;
    /// n^{k/4} / (4 sqrt(2) k)^k
    auto covering_size_bound(std::uint64_t n, std::size_t k) -> double;

    /// Relative slack required before a floating-point bound comparison counts
    /// as satisfied.
    inline constexpr double bound_margin = 1e-6;

    /// (bound - observed) / |bound|; positive when observed is below the bound.
    auto relative_margin(double observed, double bound) -> double;
    /// observed <= bound with a relative margin of at least bound_margin.
    auto below_bound(double observed, double bound) -> bool;
    /// observed >= bound with a relative margin of at least bound_margin.
    auto above_bound(double observed, double bound) -> bool;

    struct BoundsReport
    {
        std::uint64_t q = 0;
        std::size_t k = 0;
        std::uint64_t n = 0;

        Rational balanced_count_bound;
        double capacity_bound = 0;
        double theorem_bound = 0;

        // Present only for exact runs.
        std::optional<BigInt> balanced_count;
        std::optional<BigInt> max_capacity;
        std::optional<BigInt> exact_cover_lower_bound;
    };

    /// Closed-form bounds for (q, k); with `exact`, also the measured counting
    /// skeleton on the generated incidence graph. Throws PreconditionError
    /// unless k is even, k >= 2 and k <= q.
    auto evaluate_bounds(std::uint64_t q, std::size_t k, bool exact, Budget * budget = nullptr,
            unsigned workers = 1) -> BoundsReport;
}
