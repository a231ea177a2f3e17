#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fibcensus/density_stats.hpp"
#include "fibcensus/lemma_suite.hpp"
#include "fibcensus/rank_census.hpp"

namespace fibcensus::report {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

// Census rows: header "a,k,count", one row per interval, LF endings.
std::string census_csv(const std::vector<CensusRecord>& records);
json census_json_array(const std::vector<CensusRecord>& records);

json count_json(const CensusRecord& record);
std::string count_csv(const CensusRecord& record);

json theorem_json(const TheoremReport& report);
std::string theorem_text(const TheoremReport& report);

json density_json(const DensityReport& report);
std::string density_csv(const DensityReport& report);
std::string density_text(const DensityReport& report);

json theta_json(const ThetaApprox& approx);
std::string theta_csv(const ThetaApprox& approx);
std::string theta_text(const ThetaApprox& approx);

json stats_json(const StatsReport& report);
std::string stats_csv(const StatsReport& report);
std::string stats_text(const StatsReport& report);

// One JSON object per line, one line per checker.
std::string check_results_json_lines(const std::vector<CheckResult>& results);
std::string check_results_text(const std::vector<CheckResult>& results);
std::string check_results_csv(const std::vector<CheckResult>& results);

}  // namespace fibcensus::report
