#include <icf/family_io.hpp>
#include <icf/errors.hpp>
#include <icf/graph_io.hpp>
#include <icf/json_schema.hpp>

#include <limits>
#include <string>

namespace icf
{
    using nlohmann::json;

    auto big_to_json(const BigInt & value) -> json
    {
        if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
            return value.convert_to<std::uint64_t>();
        return value.str();
    }

    namespace
    {
        auto sets_to_json(const std::vector<VertexSet> & sets) -> json
        {
            auto result = json::array();
            for (auto & s : sets)
                result.push_back(s.members());
            return result;
        }
    }

    auto family_to_json(const Graph & g, const CoveringFamily & family) -> json
    {
        auto & meta = family.meta;
        return {
            { "graph_hash", graph_hash(g) },
            { "method", "monte-carlo" },
            { "k", meta.k },
            { "delta", meta.delta },
            { "seed", meta.seed },
            { "t", meta.samples },
            { "d", meta.degeneracy },
            { "p", to_fraction_string(meta.p) },
            { "p_min", to_fraction_string(meta.p_min) },
            { "universe_size", big_to_json(meta.universe) },
            { "universe_exact", meta.universe_exact },
            { "sets", sets_to_json(family.sets) }
        };
    }

    auto greedy_family_to_json(const Graph & g, std::size_t k, const std::vector<VertexSet> & sets) -> json
    {
        return {
            { "graph_hash", graph_hash(g) },
            { "method", "greedy" },
            { "k", k },
            { "delta", nullptr },
            { "seed", nullptr },
            { "t", nullptr },
            { "d", nullptr },
            { "p", nullptr },
            { "sets", sets_to_json(sets) }
        };
    }

    auto family_from_json(const json & document) -> FamilyDocument
    {
        auto errors = validate_json(document, family_schema());
        if (! errors.empty()) {
            std::string message = "family document does not match its schema:";
            for (auto & e : errors)
                message += "\n  " + e;
            throw InvalidArgument(message);
        }

        FamilyDocument result;
        result.graph_hash = document["graph_hash"].get<std::string>();
        result.method = document["method"].get<std::string>();
        result.k = document["k"].get<std::size_t>();
        if (! document["delta"].is_null())
            result.delta = document["delta"].get<double>();
        if (! document["seed"].is_null())
            result.seed = document["seed"].get<std::uint64_t>();
        if (! document["t"].is_null())
            result.t = document["t"].get<std::uint64_t>();
        if (! document["d"].is_null())
            result.d = document["d"].get<std::size_t>();
        if (! document["p"].is_null())
            result.p = parse_fraction(document["p"].get<std::string>());
        for (auto & s : document["sets"])
            result.sets.push_back(s.get<std::vector<Vertex>>());
        return result;
    }

    auto FamilyDocument::vertex_sets(const Graph & g) const -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        result.reserve(sets.size());
        for (std::size_t i = 0 ; i < sets.size() ; ++i) {
            auto & members = sets[i];
            for (std::size_t j = 1 ; j < members.size() ; ++j)
                if (members[j - 1] >= members[j])
                    throw InvalidArgument("family member " + std::to_string(i) + " is not strictly ascending");
            result.emplace_back(g.n(), members);
        }
        return result;
    }

    auto dump_json(const json & document) -> std::string
    {
        return document.dump(2) + "\n";
    }
}
