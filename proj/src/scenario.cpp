#include "bellspace/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bellspace {

namespace {

using nlohmann::json;

Vec3 parse_vec3(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
        !j[2].is_number()) {
        throw ScenarioError("field \"" + field + "\" must be an array of three numbers");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

UnitVector3 parse_direction(const json& j, const std::string& field) {
    const Vec3 v = parse_vec3(j, field);
    try {
        return UnitVector3(v.x, v.y, v.z);
    } catch (const std::invalid_argument& e) {
        throw ScenarioError("field \"" + field + "\": " + e.what());
    }
}

const json& require(const json& j, const std::string& field) {
    auto it = j.find(field);
    if (it == j.end()) throw ScenarioError("missing field \"" + field + "\"");
    return *it;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ScenarioError("unknown field \"" + it.key() + "\" in " + where);
        }
    }
}

void parse_region(const json& j, const std::string& field, Vec3& lo, Vec3& hi) {
    if (!j.is_object()) throw ScenarioError("field \"" + field + "\" must be an object");
    check_keys(j, {"lo", "hi"}, "\"" + field + "\"");
    if (!j.count("lo")) throw ScenarioError("missing field \"" + field + ".lo\"");
    if (!j.count("hi")) throw ScenarioError("missing field \"" + field + ".hi\"");
    lo = parse_vec3(j["lo"], field + ".lo");
    hi = parse_vec3(j["hi"], field + ".hi");
}

std::vector<UnitVector3> parse_direction_list(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) {
        throw ScenarioError("field \"" + field + "\" must be a non-empty array of directions");
    }
    std::vector<UnitVector3> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_direction(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");

    check_keys(j,
               {"comment", "inverse_width", "mean1", "mean2", "region1", "region2", "settings",
                "settings_a", "settings_b"},
               "scenario");

    ScenarioFile f;
    const json& iw = require(j, "inverse_width");
    if (!iw.is_number()) throw ScenarioError("field \"inverse_width\" must be a number");
    f.inverse_width = iw.get<double>();
    if (!(f.inverse_width > 0.0)) {
        throw ScenarioError("field \"inverse_width\" must be positive");
    }

    f.mean1 = parse_vec3(require(j, "mean1"), "mean1");
    f.mean2 = parse_vec3(require(j, "mean2"), "mean2");
    parse_region(require(j, "region1"), "region1", f.region1_lo, f.region1_hi);
    parse_region(require(j, "region2"), "region2", f.region2_lo, f.region2_hi);

    if (j.count("settings")) {
        const json& s = j["settings"];
        if (!s.is_object()) throw ScenarioError("field \"settings\" must be an object");
        check_keys(s, {"a", "a_prime", "b", "b_prime"}, "\"settings\"");
        f.settings = CHSHSettings{
            parse_direction(require(s, "a"), "settings.a"),
            parse_direction(require(s, "a_prime"), "settings.a_prime"),
            parse_direction(require(s, "b"), "settings.b"),
            parse_direction(require(s, "b_prime"), "settings.b_prime"),
        };
    }

    const bool has_a = j.count("settings_a") > 0;
    const bool has_b = j.count("settings_b") > 0;
    if (has_a != has_b) {
        throw ScenarioError("fields \"settings_a\" and \"settings_b\" must appear together");
    }
    if (has_a) {
        f.settings_a = parse_direction_list(j["settings_a"], "settings_a");
        f.settings_b = parse_direction_list(j["settings_b"], "settings_b");
    }
    return f;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario_text(buf.str());
    } catch (const ScenarioError& e) {
        throw ScenarioError(path.string() + ": " + e.what());
    }
}

Scenario to_scenario(const ScenarioFile& f) {
    const double scale = 1.0 / f.inverse_width;
    GaussianPacket p1(scale * f.mean1, f.inverse_width);
    GaussianPacket p2(scale * f.mean2, f.inverse_width);
    try {
        BoxRegion r1(scale * f.region1_lo, scale * f.region1_hi);
        BoxRegion r2(scale * f.region2_lo, scale * f.region2_hi);
        return {ProductWaveFunction{p1, p2}, r1, r2};
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("bad region: ") + e.what());
    }
}

}  // namespace bellspace
