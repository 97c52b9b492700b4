#pragma once

#include <icf/graph.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace icf
{
    /**
     * Canonical edge-list text:
     *
     *     <n> <m> <side_p_size>\n
     *     <u> <v>\n            (m lines, u < v, ascending lexicographically)
     *
     * Parsing is strict: anything write_graph would not have produced is
     * rejected with a ParseError naming the violated rule.
     */
    auto parse_graph(std::string_view text) -> Graph;
    auto write_graph(const Graph & g) -> std::string;

    auto read_graph_file(const std::filesystem::path & path) -> Graph;
    auto write_graph_file(const Graph & g, const std::filesystem::path & path) -> void;

    /// Lower-case hex SHA-256 of the canonical edge-list bytes.
    auto graph_hash(const Graph & g) -> std::string;
}
