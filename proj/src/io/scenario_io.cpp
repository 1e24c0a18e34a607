#include "gridmix/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace gridmix::io {

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ScenarioFileError(path + ": " + message);
}

void only_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) fail(path.empty() ? "<document>" : path, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(path.empty() ? key : path + "." + key, "unknown key");
    }
}

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

double number(const Json& obj, const std::string& path, std::string_view key, std::optional<double> fallback = {}) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        if (fallback) return *fallback;
        fail(join(path, key), "missing required key");
    }
    if (!it->is_number()) fail(join(path, key), "expected a number");
    return it->get<double>();
}

std::string text(const Json& obj, const std::string& path, std::string_view key,
                 std::optional<std::string> fallback = {}) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        if (fallback) return *fallback;
        fail(join(path, key), "missing required key");
    }
    if (!it->is_string()) fail(join(path, key), "expected a string");
    return it->get<std::string>();
}

std::optional<double> optional_cap(const Json& caps, std::string_view key) {
    const auto it = caps.find(key);
    if (it == caps.end() || it->is_null()) return std::nullopt;
    if (!it->is_number()) fail(join("caps", key), "expected a number or null");
    return it->get<double>();
}

template <class Parse>
auto enum_value(const Json& doc, std::string_view key, std::string_view fallback, Parse parse) {
    const std::string value = text(doc, "", key, std::string(fallback));
    try {
        return parse(value);
    } catch (const model::ConfigError& e) {
        fail(std::string(key), e.what());
    }
}

}  // namespace

Json to_json(const model::Scenario& s) {
    Json doc;
    doc["name"] = s.name;
    if (!s.description.empty()) doc["description"] = s.description;
    doc["objective_mode"] = std::string(model::to_string(s.objective_mode));
    doc["coefficient_variant"] = std::string(model::to_string(s.variant));
    doc["annual_need_mwh"] = s.annual_need;
    doc["demand_mode"] = std::string(model::to_string(s.demand_mode));
    doc["periods"] = Json::array();
    for (const auto& p : s.periods)
        doc["periods"].push_back({{"name", p.name}, {"hours", p.hours}, {"demand_fraction", p.demand_fraction}});
    doc["sources"] = Json::array();
    for (const auto& src : s.sources) {
        doc["sources"].push_back({{"name", src.name},
                                  {"lcoe", src.lcoe},
                                  {"capital_cost", src.capital_cost},
                                  {"om_cost", src.om_cost},
                                  {"emissions_g_per_mwh", src.emissions},
                                  {"land_ft2_per_mwh", src.land_use},
                                  {"rooftop_allowance_mwh", src.rooftop_allowance},
                                  {"period_fractions", src.period_fractions},
                                  {"min_annual_output_mwh", src.min_annual_output}});
    }
    doc["caps"] = {{"emissions_g", optional_number(s.caps.emissions_g)},
                   {"budget_usd", optional_number(s.caps.budget_usd)},
                   {"land_ft2", optional_number(s.caps.land_ft2)},
                   {"rooftop_mwh", optional_number(s.caps.rooftop_mwh)}};
    doc["space_mode"] = std::string(model::to_string(s.space_mode));
    return doc;
}

model::Scenario scenario_from_json(const Json& doc) {
    only_keys(doc, "",
              {"name", "description", "objective_mode", "coefficient_variant", "annual_need_mwh", "demand_mode",
               "periods", "sources", "caps", "space_mode"});
    model::Scenario s;
    s.name = text(doc, "", "name");
    s.description = text(doc, "", "description", std::string());
    s.objective_mode = enum_value(doc, "objective_mode", "lcoe", model::parse_objective_mode);
    s.variant = enum_value(doc, "coefficient_variant", "as-printed", model::parse_variant);
    s.demand_mode = enum_value(doc, "demand_mode", "flat-annual", model::parse_demand_mode);
    s.space_mode = enum_value(doc, "space_mode", "separate-bounds", model::parse_space_mode);
    s.annual_need = number(doc, "", "annual_need_mwh");

    if (const auto it = doc.find("periods"); it != doc.end()) {
        if (!it->is_array()) fail("periods", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "periods[" + std::to_string(i) + "]";
            const Json& p = (*it)[i];
            only_keys(p, path, {"name", "hours", "demand_fraction"});
            const double hours = number(p, path, "hours");
            if (hours != static_cast<int>(hours)) fail(path + ".hours", "expected an integer");
            s.periods.push_back({text(p, path, "name"), static_cast<int>(hours), number(p, path, "demand_fraction")});
        }
    }

    const auto sources = doc.find("sources");
    if (sources == doc.end()) fail("sources", "missing required key");
    if (!sources->is_array()) fail("sources", "expected an array");
    for (std::size_t i = 0; i < sources->size(); ++i) {
        const std::string path = "sources[" + std::to_string(i) + "]";
        const Json& j = (*sources)[i];
        only_keys(j, path,
                  {"name", "lcoe", "capital_cost", "om_cost", "emissions_g_per_mwh", "land_ft2_per_mwh",
                   "rooftop_allowance_mwh", "period_fractions", "min_annual_output_mwh"});
        model::EnergySource src;
        src.name = text(j, path, "name");
        src.lcoe = number(j, path, "lcoe", 0.0);
        src.capital_cost = number(j, path, "capital_cost", 0.0);
        src.om_cost = number(j, path, "om_cost", 0.0);
        src.emissions = number(j, path, "emissions_g_per_mwh", 0.0);
        src.land_use = number(j, path, "land_ft2_per_mwh", 0.0);
        src.rooftop_allowance = number(j, path, "rooftop_allowance_mwh", 0.0);
        src.min_annual_output = number(j, path, "min_annual_output_mwh", 0.0);
        if (const auto f = j.find("period_fractions"); f != j.end()) {
            if (!f->is_array()) fail(path + ".period_fractions", "expected an array of numbers");
            for (const auto& v : *f) {
                if (!v.is_number()) fail(path + ".period_fractions", "expected an array of numbers");
                src.period_fractions.push_back(v.get<double>());
            }
        }
        s.sources.push_back(std::move(src));
    }

    if (const auto caps = doc.find("caps"); caps != doc.end()) {
        only_keys(*caps, "caps", {"emissions_g", "budget_usd", "land_ft2", "rooftop_mwh"});
        s.caps.emissions_g = optional_cap(*caps, "emissions_g");
        s.caps.budget_usd = optional_cap(*caps, "budget_usd");
        s.caps.land_ft2 = optional_cap(*caps, "land_ft2");
        s.caps.rooftop_mwh = optional_cap(*caps, "rooftop_mwh");
    }

    try {
        model::validate(s);
    } catch (const model::ConfigError& e) {
        throw ScenarioFileError(e.what());
    }
    return s;
}

model::Scenario parse_scenario(std::string_view text, std::string_view origin, const model::Scenario* base) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
        const auto prefix = text.substr(0, byte == 0 ? 0 : byte - 1);
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(prefix.begin(), prefix.end(), '\n'));
        const std::size_t last_nl = prefix.rfind('\n');
        const std::size_t column = last_nl == std::string_view::npos ? prefix.size() + 1 : prefix.size() - last_nl;
        throw ScenarioFileError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                ": syntax error");
    }
    if (base) {
        Json merged = to_json(*base);
        merged.merge_patch(doc);
        doc = std::move(merged);
    }
    try {
        return scenario_from_json(doc);
    } catch (const ScenarioFileError& e) {
        throw ScenarioFileError(std::string(origin) + ": " + e.what());
    }
}

model::Scenario load_scenario_file(const std::filesystem::path& path, const model::Scenario* base) {
    std::ifstream in(path);
    if (!in) throw ScenarioFileError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.string(), base);
}

std::vector<model::Scenario> load_catalog_dir(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<model::Scenario> out;
    for (const auto& f : files) out.push_back(load_scenario_file(f));
    return out;
}

}  // namespace gridmix::io
