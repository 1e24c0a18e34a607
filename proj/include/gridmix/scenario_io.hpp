#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gridmix/model.hpp"

namespace gridmix::io {

using Json = nlohmann::ordered_json;

/// Malformed scenario document. `what()` names the line (syntax errors) or the
/// key path (schema errors), e.g. "sources[1].lcoe: expected a number".
class ScenarioFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const model::Scenario& s);

/// Strict conversion: unknown keys and wrong types are rejected, then the
/// scenario invariants are checked.
model::Scenario scenario_from_json(const Json& doc);

/// Parses a scenario document. With `base`, the document is applied to the
/// base scenario key by key (JSON merge patch) before conversion.
model::Scenario parse_scenario(std::string_view text, std::string_view origin,
                               const model::Scenario* base = nullptr);

model::Scenario load_scenario_file(const std::filesystem::path& path, const model::Scenario* base = nullptr);

/// Every *.json scenario in `dir`, sorted by file name.
std::vector<model::Scenario> load_catalog_dir(const std::filesystem::path& dir);

}  // namespace gridmix::io
