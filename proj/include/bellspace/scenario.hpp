#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellspace/correlation.hpp"

namespace bellspace {

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsed scenario file. All lengths in the file are expressed in units of
// 1/inverse_width, which keeps files scale-free; to_scenario() converts to
// the physical lengths the library computes with.
struct ScenarioFile {
    double inverse_width = 1.0;
    Vec3 mean1;
    Vec3 mean2;
    Vec3 region1_lo, region1_hi;
    Vec3 region2_lo, region2_hi;
    std::optional<CHSHSettings> settings;          // four labelled directions
    std::vector<UnitVector3> settings_a;           // finite lists for the
    std::vector<UnitVector3> settings_b;           // membership question
};

// Accepts JSON with // and /* */ comments. Unknown or malformed fields raise
// ScenarioError naming the offending field; syntax errors carry the line and
// column from the JSON parser.
ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile load_scenario_file(const std::filesystem::path& path);

Scenario to_scenario(const ScenarioFile& f);

}  // namespace bellspace
