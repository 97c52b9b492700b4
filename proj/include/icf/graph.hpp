#pragma once

#include <icf/vertex_set.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace icf
{
    struct Edge
    {
        Vertex u;
        Vertex v;

        auto operator<=>(const Edge &) const = default;
    };

    /**
     * Immutable simple undirected graph.
     *
     * Each vertex carries both a bitset row (for constant-time adjacency and
     * word-parallel set operations) and a sorted neighbour list. A graph may be
     * flagged bipartite by giving side_p_size = s > 0, in which case vertices
     * [0, s) form side P, vertices [s, n) form side L, and every edge crosses.
     */
    class Graph
    {
        public:
            Graph() = default;

            /// Validates and builds. Throws InvalidVertex for out-of-range endpoints and
            /// InvalidArgument for self-loops, duplicate edges, or edges inside a side.
            static auto from_edges(std::size_t n, std::span<const Edge> edges, std::size_t side_p_size = 0) -> Graph;

            auto n() const -> std::size_t { return _rows.size(); }
            auto m() const -> std::size_t { return _m; }
            auto side_p_size() const -> std::size_t { return _side_p_size; }
            auto is_bipartite_flagged() const -> bool { return _side_p_size > 0; }
            auto in_side_p(Vertex v) const -> bool { return v < _side_p_size; }

            auto neighbours(Vertex v) const -> const VertexSet &;
            auto neighbour_list(Vertex v) const -> std::span<const Vertex>;
            auto degree(Vertex v) const -> std::size_t;
            auto adjacent(Vertex u, Vertex v) const -> bool;
            auto max_degree() const -> std::size_t;

            auto side_p() const -> VertexSet;
            auto side_l() const -> VertexSet;

            /// Canonical edge list: u < v, ascending lexicographically.
            auto edges() const -> std::vector<Edge>;

            auto operator==(const Graph & other) const -> bool;

        private:
            std::vector<VertexSet> _rows;
            std::vector<std::vector<Vertex>> _lists;
            std::size_t _m = 0;
            std::size_t _side_p_size = 0;

            auto check(Vertex v) const -> void;
    };

    /// N(S): union of the neighbourhoods of members of s, minus s itself.
    auto neighborhood_of_set(const Graph & g, const VertexSet & s) -> VertexSet;

    auto is_independent(const Graph & g, const VertexSet & s) -> bool;

    /// True iff no two distinct vertices share two or more common neighbours.
    auto is_c4_free(const Graph & g) -> bool;

    struct DegeneracyResult
    {
        std::vector<Vertex> order;
        std::size_t degeneracy = 0;

        /// positions()[v] is the index of v within order.
        auto positions() const -> std::vector<std::size_t>;
    };

    /// Repeated minimum-degree removal, ties broken by lowest vertex index. Every
    /// vertex has at most `degeneracy` neighbours later in the order.
    auto degeneracy_order(const Graph & g) -> DegeneracyResult;

    /// Smallest r with r * r >= n; every C4-free graph on n vertices is
    /// ceil_sqrt(n)-degenerate.
    auto ceil_sqrt(std::uint64_t n) -> std::uint64_t;

    /// Subgraph induced by s, relabelled to 0..|s|-1 in ascending original order.
    /// The bipartite flag carries over as the number of selected P-vertices.
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph;
}
