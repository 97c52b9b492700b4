#include <icf/graph.hpp>
#include <icf/errors.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

namespace icf
{
    auto Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t side_p_size) -> Graph
    {
        if (side_p_size > n)
            throw InvalidArgument("side_p_size " + std::to_string(side_p_size) + " exceeds vertex count "
                    + std::to_string(n));

        Graph g;
        g._rows.assign(n, VertexSet(n));
        g._lists.assign(n, {});
        g._side_p_size = side_p_size;

        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw InvalidVertex("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw InvalidArgument("self-loop at vertex " + std::to_string(u));
            if (g._rows[u].contains(v))
                throw InvalidArgument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            if (side_p_size > 0 && ((u < side_p_size) == (v < side_p_size)))
                throw InvalidArgument("edge " + std::to_string(u) + " " + std::to_string(v)
                        + " does not cross the bipartition");
            g._rows[u].insert(v);
            g._rows[v].insert(u);
            ++g._m;
        }

        for (Vertex v = 0 ; v < n ; ++v)
            g._lists[v] = g._rows[v].members();

        return g;
    }

    auto Graph::check(Vertex v) const -> void
    {
        if (v >= n())
            throw InvalidVertex("vertex " + std::to_string(v) + " out of range for graph on "
                    + std::to_string(n()) + " vertices");
    }

    auto Graph::neighbours(Vertex v) const -> const VertexSet &
    {
        check(v);
        return _rows[v];
    }

    auto Graph::neighbour_list(Vertex v) const -> std::span<const Vertex>
    {
        check(v);
        return _lists[v];
    }

    auto Graph::degree(Vertex v) const -> std::size_t
    {
        check(v);
        return _lists[v].size();
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        check(u);
        check(v);
        return _rows[u].contains(v);
    }

    auto Graph::max_degree() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto & l : _lists)
            result = std::max(result, l.size());
        return result;
    }

    auto Graph::side_p() const -> VertexSet
    {
        VertexSet result(n());
        for (Vertex v = 0 ; v < _side_p_size ; ++v)
            result.insert(v);
        return result;
    }

    auto Graph::side_l() const -> VertexSet
    {
        return VertexSet::full(n()) - side_p();
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_m);
        for (Vertex u = 0 ; u < n() ; ++u)
            for (auto v : _lists[u])
                if (u < v)
                    result.push_back({ u, v });
        return result;
    }

    auto Graph::operator==(const Graph & other) const -> bool
    {
        return _side_p_size == other._side_p_size && _m == other._m && _rows == other._rows;
    }

    auto neighborhood_of_set(const Graph & g, const VertexSet & s) -> VertexSet
    {
        if (s.universe() != g.n())
            throw InvalidVertex("vertex set universe " + std::to_string(s.universe())
                    + " does not match graph on " + std::to_string(g.n()) + " vertices");
        VertexSet result(g.n());
        s.for_each([&] (Vertex v) { result |= g.neighbours(v); });
        result -= s;
        return result;
    }

    auto is_independent(const Graph & g, const VertexSet & s) -> bool
    {
        if (s.universe() != g.n())
            throw InvalidVertex("vertex set universe does not match graph");
        bool ok = true;
        s.for_each([&] (Vertex v) { if (ok && g.neighbours(v).intersects(s)) ok = false; });
        return ok;
    }

    auto is_c4_free(const Graph & g) -> bool
    {
        for (Vertex u = 0 ; u < g.n() ; ++u)
            for (Vertex v = u + 1 ; v < g.n() ; ++v)
                if (intersection_count(g.neighbours(u), g.neighbours(v)) >= 2)
                    return false;
        return true;
    }

    auto DegeneracyResult::positions() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result(order.size());
        for (std::size_t i = 0 ; i < order.size() ; ++i)
            result[order[i]] = i;
        return result;
    }

    auto degeneracy_order(const Graph & g) -> DegeneracyResult
    {
        DegeneracyResult result;
        result.order.reserve(g.n());

        std::vector<std::size_t> degree(g.n());
        std::vector<bool> removed(g.n(), false);
        std::set<std::pair<std::size_t, Vertex>> queue;
        for (Vertex v = 0 ; v < g.n() ; ++v) {
            degree[v] = g.degree(v);
            queue.emplace(degree[v], v);
        }

        while (! queue.empty()) {
            auto [d, v] = *queue.begin();
            queue.erase(queue.begin());
            removed[v] = true;
            result.order.push_back(v);
            result.degeneracy = std::max(result.degeneracy, d);
            for (auto w : g.neighbour_list(v)) {
                if (removed[w])
                    continue;
                queue.erase({ degree[w], w });
                queue.emplace(--degree[w], w);
            }
        }

        return result;
    }

    auto ceil_sqrt(std::uint64_t n) -> std::uint64_t
    {
        auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
        while (r * r < n)
            ++r;
        while (r > 0 && (r - 1) * (r - 1) >= n)
            --r;
        return r;
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph
    {
        if (s.universe() != g.n())
            throw InvalidVertex("vertex set universe does not match graph");
        if (s.empty())
            throw InvalidArgument("induced subgraph of an empty vertex set");

        auto members = s.members();
        std::vector<std::size_t> relabel(g.n(), g.n());
        std::size_t p_count = 0;
        for (std::size_t i = 0 ; i < members.size() ; ++i) {
            relabel[members[i]] = i;
            if (g.in_side_p(members[i]))
                ++p_count;
        }

        std::vector<Edge> edges;
        for (auto u : members)
            for (auto v : g.neighbour_list(u))
                if (u < v && s.contains(v))
                    edges.push_back({ relabel[u], relabel[v] });

        return Graph::from_edges(members.size(), edges, g.is_bipartite_flagged() ? p_count : 0);
    }
}
