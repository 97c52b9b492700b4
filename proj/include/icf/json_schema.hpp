#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace icf
{
    /**
     * Validator for the subset of JSON Schema used by the report formats:
     * type (string or list), required, properties, additionalProperties
     * (boolean), items, enum, minimum and pattern. As in JSON Schema,
     * minimum applies only to numbers and pattern only to strings.
     *
     * Returns one message per violation, each prefixed by a JSON pointer to
     * the offending value; an empty list means the document is valid.
     */
    auto validate_json(const nlohmann::json & document, const nlohmann::json & schema) -> std::vector<std::string>;

    auto family_schema() -> const nlohmann::json &;
    auto run_report_schema() -> const nlohmann::json &;
    auto bounds_report_schema() -> const nlohmann::json &;

    // Raw schema text, embedded from schemas/*.schema.json at build time.
    auto family_schema_text() -> std::string_view;
    auto run_report_schema_text() -> std::string_view;
    auto bounds_report_schema_text() -> std::string_view;
}
