#pragma once

#include <json.hpp>

#include "jobconfig.hpp"

namespace latsum::cli {

using json = nlohmann::json;

// Each command returns the machine-readable report; run() handles rendering,
// output files, and the exit-code contract (0 ok, 1 failed checks, 2 invalid
// orders, 3 divergent order, 4 unsupported point set).
json cmd_sigma(const JobConfig& cfg);
json cmd_S(const JobConfig& cfg);
json cmd_eta(const JobConfig& cfg);
json cmd_table1(const JobConfig& cfg);
json cmd_verify(const JobConfig& cfg);
json cmd_points(const JobConfig& cfg);

std::string render_text(const json& report);
std::string render_csv(const json& report);

int run(const JobConfig& cfg);

}  // namespace latsum::cli
