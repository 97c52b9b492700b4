#pragma once

#include <icf/covering.hpp>
#include <icf/graph.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace icf
{
    /// A family file as read back from disk. Metadata fields are absent for
    /// greedy families.
    struct FamilyDocument
    {
        std::string graph_hash;
        std::string method;
        std::size_t k = 0;
        std::optional<double> delta;
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> t;
        std::optional<std::size_t> d;
        std::optional<Rational> p;
        std::vector<std::vector<Vertex>> sets;

        /// Member sets over the vertices of g. Throws InvalidVertex when a member
        /// names a vertex outside g, InvalidArgument when one is not strictly ascending.
        auto vertex_sets(const Graph & g) const -> std::vector<VertexSet>;
    };

    auto family_to_json(const Graph & g, const CoveringFamily & family) -> nlohmann::json;
    auto greedy_family_to_json(const Graph & g, std::size_t k, const std::vector<VertexSet> & sets) -> nlohmann::json;

    /// Validates against the family schema first; throws InvalidArgument listing
    /// every violation.
    auto family_from_json(const nlohmann::json & document) -> FamilyDocument;

    /// Two-space indented JSON with a trailing newline; stable for identical input.
    auto dump_json(const nlohmann::json & document) -> std::string;

    /// Integers that fit in 64 bits become JSON integers, larger ones decimal strings.
    auto big_to_json(const BigInt & value) -> nlohmann::json;
}
