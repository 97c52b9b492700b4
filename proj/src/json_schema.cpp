#include <icf/json_schema.hpp>

#include <regex>

namespace icf
{
    namespace
    {
        using nlohmann::json;

        auto matches_type(const json & value, const std::string & type) -> bool
        {
            if (type == "object")  return value.is_object();
            if (type == "array")   return value.is_array();
            if (type == "string")  return value.is_string();
            if (type == "integer") return value.is_number_integer();
            if (type == "number")  return value.is_number();
            if (type == "boolean") return value.is_boolean();
            if (type == "null")    return value.is_null();
            return false;
        }

        auto validate_at(const json & value, const json & schema, const std::string & pointer,
                std::vector<std::string> & errors) -> void
        {
            auto where = pointer.empty() ? std::string("/") : pointer;

            if (auto t = schema.find("type") ; t != schema.end()) {
                bool ok = false;
                if (t->is_string())
                    ok = matches_type(value, t->get<std::string>());
                else
                    for (auto & alternative : *t)
                        ok = ok || matches_type(value, alternative.get<std::string>());
                if (! ok) {
                    errors.push_back(where + ": expected type " + t->dump() + ", found " + value.type_name());
                    return;
                }
            }

            if (auto e = schema.find("enum") ; e != schema.end()) {
                bool ok = false;
                for (auto & candidate : *e)
                    ok = ok || candidate == value;
                if (! ok)
                    errors.push_back(where + ": value " + value.dump() + " not in " + e->dump());
            }

            if (auto m = schema.find("minimum") ; m != schema.end() && value.is_number()) {
                if (value.get<double>() < m->get<double>())
                    errors.push_back(where + ": " + value.dump() + " is below minimum " + m->dump());
            }

            if (auto p = schema.find("pattern") ; p != schema.end() && value.is_string()) {
                if (! std::regex_search(value.get<std::string>(), std::regex(p->get<std::string>())))
                    errors.push_back(where + ": " + value.dump() + " does not match " + p->dump());
            }

            if (value.is_object()) {
                if (auto r = schema.find("required") ; r != schema.end())
                    for (auto & name : *r)
                        if (! value.contains(name.get<std::string>()))
                            errors.push_back(where + ": missing required field " + name.dump());

                auto properties = schema.find("properties");
                auto additional = schema.find("additionalProperties");
                for (auto & [key, child] : value.items()) {
                    if (properties != schema.end() && properties->contains(key))
                        validate_at(child, (*properties)[key], pointer + "/" + key, errors);
                    else if (additional != schema.end() && additional->is_boolean() && ! additional->get<bool>())
                        errors.push_back(where + ": unexpected field \"" + key + "\"");
                }
            }

            if (value.is_array())
                if (auto items = schema.find("items") ; items != schema.end())
                    for (std::size_t i = 0 ; i < value.size() ; ++i)
                        validate_at(value[i], *items, pointer + "/" + std::to_string(i), errors);
        }
    }

    auto validate_json(const nlohmann::json & document, const nlohmann::json & schema) -> std::vector<std::string>
    {
        std::vector<std::string> errors;
        validate_at(document, schema, "", errors);
        return errors;
    }

    auto family_schema() -> const nlohmann::json &
    {
        static const auto schema = nlohmann::json::parse(family_schema_text());
        return schema;
    }

    auto run_report_schema() -> const nlohmann::json &
    {
        static const auto schema = nlohmann::json::parse(run_report_schema_text());
        return schema;
    }

    auto bounds_report_schema() -> const nlohmann::json &
    {
        static const auto schema = nlohmann::json::parse(bounds_report_schema_text());
        return schema;
    }
}
