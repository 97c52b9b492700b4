#pragma once

#include <icf/graph.hpp>

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace icf
{
    /**
     * Shared step counter. Each enumeration node (an emitted set, a search
     * node, a subset examined) charges one step; exceeding the limit throws
     * BudgetExceeded. Safe to share between worker threads.
     */
    class Budget
    {
        public:
            static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();
            static constexpr std::uint64_t default_steps = 10'000'000;

            explicit Budget(std::uint64_t limit = unlimited) : _limit(limit) { }

            Budget(const Budget &) = delete;
            auto operator=(const Budget &) -> Budget & = delete;

            auto charge(std::uint64_t steps = 1) -> void;

            auto used() const -> std::uint64_t { return _used.load(std::memory_order_relaxed); }
            auto limit() const -> std::uint64_t { return _limit; }

        private:
            std::uint64_t _limit;
            std::atomic<std::uint64_t> _used{ 0 };
    };

    enum class Visit
    {
        proceed,
        stop
    };

    /// Receives the ascending member list of each emitted set.
    using IndependentSetVisitor = std::function<Visit (std::span<const Vertex>)>;

    /// Every independent set of size 1..k, exactly once, in lexicographic order
    /// of ascending member lists. Returns false iff the visitor stopped early.
    auto for_each_independent_set(const Graph & g, std::size_t k, const IndependentSetVisitor & visit,
            Budget * budget = nullptr) -> bool;

    /// As above, restricted to the sets whose smallest member is root. Used to
    /// partition the enumeration across workers.
    auto for_each_independent_set_from(const Graph & g, std::size_t k, Vertex root,
            const IndependentSetVisitor & visit, Budget * budget = nullptr) -> bool;

    auto independent_sets(const Graph & g, std::size_t k, Budget * budget = nullptr) -> std::vector<VertexSet>;

    auto count_independent_sets(const Graph & g, std::size_t k, Budget * budget = nullptr,
            unsigned workers = 1) -> std::uint64_t;

    using MaximalSetVisitor = std::function<Visit (const VertexSet &)>;

    /// Every inclusion-maximal independent set exactly once (pivoting
    /// Bron-Kerbosch on the complement). Emission order is deterministic but
    /// not lexicographic.
    auto for_each_maximal_independent_set(const Graph & g, const MaximalSetVisitor & visit,
            Budget * budget = nullptr) -> bool;

    /// All maximal independent sets, sorted lexicographically.
    auto maximal_independent_sets(const Graph & g, Budget * budget = nullptr) -> std::vector<VertexSet>;

    /// Runs body(worker_index) on `workers` threads (inline when workers <= 1)
    /// and rethrows the first exception raised by any worker.
    auto run_workers(unsigned workers, const std::function<void (unsigned)> & body) -> void;
}
