#include <icf/report.hpp>

#include <algorithm>

namespace icf
{
    auto to_json(const CheckRecord & check) -> nlohmann::json
    {
        nlohmann::json result = {
            { "name", check.name },
            { "property", check.property },
            { "expected", check.expected },
            { "observed", check.observed },
            { "margin", check.margin ? nlohmann::json(*check.margin) : nlohmann::json(nullptr) },
            { "passed", check.passed }
        };
        if (! check.detail.empty())
            result["detail"] = check.detail;
        return result;
    }

    auto to_string(Outcome outcome) -> std::string
    {
        switch (outcome) {
            case Outcome::pass:  return "pass";
            case Outcome::fail:  return "fail";
            case Outcome::error: return "error";
        }
        return "error";
    }

    auto RunReport::outcome() const -> Outcome
    {
        if (error)
            return Outcome::error;
        return std::all_of(checks.begin(), checks.end(), [] (const CheckRecord & c) { return c.passed; })
            ? Outcome::pass : Outcome::fail;
    }

    auto RunReport::to_json() const -> nlohmann::json
    {
        auto records = nlohmann::json::array();
        for (auto & c : checks)
            records.push_back(icf::to_json(c));
        nlohmann::json result = {
            { "command", command },
            { "parameters", parameters },
            { "outcome", to_string(outcome()) },
            { "checks", records }
        };
        if (error)
            result["error"] = *error;
        if (duration_ms)
            result["duration_ms"] = *duration_ms;
        return result;
    }
}
