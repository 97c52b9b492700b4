#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace icf
{
    /// One verified property. `property` names the structural or extremal fact
    /// the check exercises (for example "product-bound").
    struct CheckRecord
    {
        std::string name;
        std::string property;
        nlohmann::json expected;
        nlohmann::json observed;
        std::optional<double> margin;
        bool passed = false;
        std::string detail;
    };

    auto to_json(const CheckRecord & check) -> nlohmann::json;

    enum class Outcome
    {
        pass,
        fail,
        error
    };

    auto to_string(Outcome outcome) -> std::string;

    struct RunReport
    {
        std::string command;
        nlohmann::json parameters = nlohmann::json::object();
        std::vector<CheckRecord> checks;
        std::optional<std::string> error;
        std::optional<double> duration_ms;

        /// error when an error is recorded, otherwise pass iff every check passed.
        auto outcome() const -> Outcome;
        auto to_json() const -> nlohmann::json;
    };
}
