#include <icf/enumerate.hpp>
#include <icf/errors.hpp>

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace icf
{
    auto Budget::charge(std::uint64_t steps) -> void
    {
        auto before = _used.fetch_add(steps, std::memory_order_relaxed);
        if (before + steps > _limit || before + steps < before)
            throw BudgetExceeded("enumeration budget of " + std::to_string(_limit) + " steps exceeded");
    }

    auto run_workers(unsigned workers, const std::function<void (unsigned)> & body) -> void
    {
        if (workers <= 1) {
            body(0);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0 ; w < workers ; ++w)
            threads.emplace_back([&, w] {
                try {
                    body(w);
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                }
            });
        for (auto & t : threads)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    namespace
    {
        class IndependentSetSearch
        {
            public:
                IndependentSetSearch(const Graph & g, std::size_t k, const IndependentSetVisitor & visit, Budget * budget) :
                    _g(g), _k(k), _visit(visit), _budget(budget),
                    _candidates(k + 1, VertexSet(g.n()))
                {
                    _current.reserve(k);
                }

                auto run_from(Vertex root) -> bool
                {
                    if (_k == 0)
                        return true;
                    _current.assign(1, root);
                    if (! emit())
                        return false;
                    if (_k == 1)
                        return true;
                    _candidates[1] = VertexSet::full(_g.n());
                    _candidates[1] -= _g.neighbours(root);
                    _candidates[1].clear_up_to(root);
                    return extend(1);
                }

            private:
                const Graph & _g;
                std::size_t _k;
                const IndependentSetVisitor & _visit;
                Budget * _budget;
                std::vector<VertexSet> _candidates;
                std::vector<Vertex> _current;

                auto emit() -> bool
                {
                    if (_budget)
                        _budget->charge();
                    return _visit(_current) == Visit::proceed;
                }

                // _candidates[depth]: vertices that extend _current, all greater than its last member.
                auto extend(std::size_t depth) -> bool
                {
                    const auto & candidates = _candidates[depth];
                    for (auto v = candidates.first() ; v != candidates.universe() ; v = candidates.next_after(v)) {
                        _current.push_back(v);
                        if (! emit())
                            return false;
                        if (_current.size() < _k) {
                            auto & next = _candidates[depth + 1];
                            next = candidates;
                            next -= _g.neighbours(v);
                            next.clear_up_to(v);
                            if (! next.empty() && ! extend(depth + 1))
                                return false;
                        }
                        _current.pop_back();
                    }
                    return true;
                }
        };
    }

    auto for_each_independent_set_from(const Graph & g, std::size_t k, Vertex root,
            const IndependentSetVisitor & visit, Budget * budget) -> bool
    {
        if (root >= g.n())
            throw InvalidVertex("root vertex " + std::to_string(root) + " out of range");
        IndependentSetSearch search(g, k, visit, budget);
        return search.run_from(root);
    }

    auto for_each_independent_set(const Graph & g, std::size_t k, const IndependentSetVisitor & visit,
            Budget * budget) -> bool
    {
        IndependentSetSearch search(g, k, visit, budget);
        for (Vertex root = 0 ; root < g.n() ; ++root)
            if (! search.run_from(root))
                return false;
        return true;
    }

    auto independent_sets(const Graph & g, std::size_t k, Budget * budget) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        for_each_independent_set(g, k, [&] (std::span<const Vertex> members) {
                result.emplace_back(g.n(), members);
                return Visit::proceed;
            }, budget);
        return result;
    }

    auto count_independent_sets(const Graph & g, std::size_t k, Budget * budget, unsigned workers) -> std::uint64_t
    {
        workers = std::max(1u, workers);
        std::vector<std::uint64_t> partial(workers, 0);
        run_workers(workers, [&] (unsigned w) {
                IndependentSetVisitor counter = [&partial, w] (std::span<const Vertex>) {
                    ++partial[w];
                    return Visit::proceed;
                };
                IndependentSetSearch search(g, k, counter, budget);
                for (Vertex root = w ; root < g.n() ; root += workers)
                    search.run_from(root);
            });
        std::uint64_t total = 0;
        for (auto c : partial)
            total += c;
        return total;
    }

    namespace
    {
        class MaximalSetSearch
        {
            public:
                MaximalSetSearch(const Graph & g, const MaximalSetVisitor & visit, Budget * budget) :
                    _g(g), _visit(visit), _budget(budget)
                {
                }

                auto run() -> bool
                {
                    VertexSet r(_g.n()), x(_g.n());
                    return expand(r, VertexSet::full(_g.n()), x);
                }

            private:
                const Graph & _g;
                const MaximalSetVisitor & _visit;
                Budget * _budget;

                // Non-neighbours of v in p, excluding v itself.
                auto compatible(const VertexSet & p, Vertex v) const -> VertexSet
                {
                    auto result = p - _g.neighbours(v);
                    result.erase(v);
                    return result;
                }

                auto expand(VertexSet & r, VertexSet p, VertexSet x) -> bool
                {
                    if (_budget)
                        _budget->charge();

                    if (p.empty()) {
                        if (x.empty())
                            return _visit(r) == Visit::proceed;
                        return true;
                    }

                    // Pivot with the most compatible candidates left, so that the
                    // fewest branches remain.
                    auto p_or_x = p | x;
                    Vertex pivot = p_or_x.first();
                    std::size_t best = 0;
                    bool have_pivot = false;
                    p_or_x.for_each([&] (Vertex u) {
                            auto c = compatible(p, u).count();
                            if (! have_pivot || c > best) {
                                best = c;
                                pivot = u;
                                have_pivot = true;
                            }
                        });

                    auto branch = p - compatible(p, pivot);
                    for (auto v : branch.members()) {
                        r.insert(v);
                        if (! expand(r, compatible(p, v), compatible(x, v)))
                            return false;
                        r.erase(v);
                        p.erase(v);
                        x.insert(v);
                    }
                    return true;
                }
        };
    }

    auto for_each_maximal_independent_set(const Graph & g, const MaximalSetVisitor & visit, Budget * budget) -> bool
    {
        if (g.n() == 0)
            return true;
        MaximalSetSearch search(g, visit, budget);
        return search.run();
    }

    auto maximal_independent_sets(const Graph & g, Budget * budget) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        for_each_maximal_independent_set(g, [&] (const VertexSet & s) {
                result.push_back(s);
                return Visit::proceed;
            }, budget);
        std::sort(result.begin(), result.end(), lexicographic_less);
        return result;
    }
}
