#pragma once

#include "oracle.hpp"

#include <icf/graph.hpp>

#include <vector>

namespace testing
{
    inline auto to_graph(const oracle::Matrix & m, std::size_t side_p = 0) -> icf::Graph
    {
        std::vector<icf::Edge> edges;
        for (auto [u, v] : m.edges())
            edges.push_back({ u, v });
        return icf::Graph::from_edges(m.n, edges, side_p);
    }

    inline auto path(std::size_t n) -> icf::Graph
    {
        std::vector<icf::Edge> edges;
        for (std::size_t v = 0 ; v + 1 < n ; ++v)
            edges.push_back({ v, v + 1 });
        return icf::Graph::from_edges(n, edges);
    }

    inline auto cycle(std::size_t n) -> icf::Graph
    {
        std::vector<icf::Edge> edges;
        for (std::size_t v = 0 ; v + 1 < n ; ++v)
            edges.push_back({ v, v + 1 });
        edges.push_back({ 0, n - 1 });
        return icf::Graph::from_edges(n, edges);
    }

    inline auto complete(std::size_t n) -> icf::Graph
    {
        std::vector<icf::Edge> edges;
        for (std::size_t u = 0 ; u < n ; ++u)
            for (std::size_t v = u + 1 ; v < n ; ++v)
                edges.push_back({ u, v });
        return icf::Graph::from_edges(n, edges);
    }

    inline auto edgeless(std::size_t n, std::size_t side_p = 0) -> icf::Graph
    {
        return icf::Graph::from_edges(n, std::vector<icf::Edge>{ }, side_p);
    }

    inline auto sets_as_lists(const std::vector<icf::VertexSet> & sets) -> std::vector<std::vector<std::size_t>>
    {
        std::vector<std::vector<std::size_t>> result;
        for (auto & s : sets)
            result.push_back(s.members());
        return result;
    }
}
