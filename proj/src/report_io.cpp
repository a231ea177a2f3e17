#include "fibcensus/report_io.hpp"

#include <sstream>

namespace fibcensus::report {

std::string census_csv(const std::vector<CensusRecord>& records) {
  std::string out = "a,k,count\n";
  for (const auto& r : records) {
    out += std::to_string(r.a);
    out += ',';
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.count);
    out += '\n';
  }
  return out;
}

json census_json_array(const std::vector<CensusRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back({{"a", r.a}, {"k", r.k}, {"count", r.count}});
  return arr;
}

json count_json(const CensusRecord& r) {
  return {{"schema_version", kSchemaVersion}, {"a", r.a}, {"k", r.k}, {"count", r.count}};
}

std::string count_csv(const CensusRecord& r) { return census_csv({r}); }

json theorem_json(const TheoremReport& r) {
  json hist = json::object();
  for (const auto& [count, n] : r.histogram) hist[std::to_string(count)] = n;
  json out{{"schema_version", kSchemaVersion}, {"a", r.a},       {"max_k", r.intervals - 1},
           {"intervals", r.intervals},        {"ell", r.ell},    {"all_pass", r.all_pass},
           {"histogram", hist},               {"violations", census_json_array(r.violations)}};
  return out;
}

std::string theorem_text(const TheoremReport& r) {
  std::ostringstream os;
  os << "a=" << r.a << " intervals=" << r.intervals << " ell=" << r.ell
     << " all_pass=" << (r.all_pass ? "true" : "false") << "\n";
  for (const auto& [count, n] : r.histogram)
    os << "count " << count << ": " << n << " intervals\n";
  for (const auto& v : r.violations)
    os << "VIOLATION a=" << v.a << " k=" << v.k << " count=" << v.count << "\n";
  return os.str();
}

json density_json(const DensityReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"a", r.a},
          {"N", r.N},
          {"ell", r.ell},
          {"A_N", r.A_N},
          {"B_N", r.B_N},
          {"share_A", r.share_A},
          {"share_B", r.share_B},
          {"theta", r.theta},
          {"theta_err", r.theta_err},
          {"theoretical_A", r.theoretical_A},
          {"theoretical_B", r.theoretical_B},
          {"deviation", r.deviation}};
}

std::string density_csv(const DensityReport& r) {
  std::string out =
      "schema_version,a,N,ell,A_N,B_N,share_A,share_B,theta,theta_err,theoretical_A,"
      "theoretical_B,deviation\n";
  std::ostringstream os;
  os << kSchemaVersion << ',' << r.a << ',' << r.N << ',' << r.ell << ',' << r.A_N << ','
     << r.B_N << ',' << r.share_A << ',' << r.share_B << ',' << r.theta << ',' << r.theta_err
     << ',' << r.theoretical_A << ',' << r.theoretical_B << ',' << r.deviation << '\n';
  return out + os.str();
}

std::string density_text(const DensityReport& r) {
  std::ostringstream os;
  os << "a=" << r.a << " N=" << r.N << " ell=" << r.ell << "\n"
     << "A_N=" << r.A_N << " (share " << r.share_A << ", theoretical " << r.theoretical_A
     << ")\n"
     << "B_N=" << r.B_N << " (share " << r.share_B << ", theoretical " << r.theoretical_B
     << ")\n"
     << "theta=" << r.theta << " +/- " << r.theta_err << "\n"
     << "deviation=" << r.deviation << "\n";
  return os.str();
}

json theta_json(const ThetaApprox& t) {
  return {{"schema_version", kSchemaVersion},
          {"a", t.a},
          {"digits", t.digits},
          {"value", t.value},
          {"error_bound", t.error_bound},
          {"floor_part", t.floor_part},
          {"frac_part", t.frac_part},
          {"prec_bits", t.prec_bits}};
}

std::string theta_csv(const ThetaApprox& t) {
  std::ostringstream os;
  os << "schema_version,a,digits,value,error_bound,floor_part,frac_part,prec_bits\n"
     << kSchemaVersion << ',' << t.a << ',' << t.digits << ',' << t.value << ','
     << t.error_bound << ',' << t.floor_part << ',' << t.frac_part << ',' << t.prec_bits
     << '\n';
  return os.str();
}

std::string theta_text(const ThetaApprox& t) {
  std::ostringstream os;
  os << "theta(" << t.a << ") = " << t.value << " +/- " << t.error_bound << "\n"
     << "floor=" << t.floor_part << " frac=" << t.frac_part << " (certified at "
     << t.prec_bits << " bits)\n";
  return os.str();
}

json stats_json(const StatsReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"a", r.a},
          {"N", r.N},
          {"ell", r.ell},
          {"expectation", r.expectation},
          {"stddev", r.stddev},
          {"empirical_mean", r.empirical_mean},
          {"empirical_std", r.empirical_std},
          {"count_sum", r.count_sum},
          {"count_sum_sq", r.count_sum_sq}};
}

std::string stats_csv(const StatsReport& r) {
  std::ostringstream os;
  os << "schema_version,a,N,ell,expectation,stddev,empirical_mean,empirical_std,count_sum,"
        "count_sum_sq\n"
     << kSchemaVersion << ',' << r.a << ',' << r.N << ',' << r.ell << ',' << r.expectation
     << ',' << r.stddev << ',' << r.empirical_mean << ',' << r.empirical_std << ','
     << r.count_sum << ',' << r.count_sum_sq << '\n';
  return os.str();
}

std::string stats_text(const StatsReport& r) {
  std::ostringstream os;
  os << "a=" << r.a << " N=" << r.N << " ell=" << r.ell << "\n"
     << "expectation=" << r.expectation << " stddev=" << r.stddev << "\n"
     << "empirical_mean=" << r.empirical_mean << " empirical_std=" << r.empirical_std << "\n";
  return os.str();
}

namespace {
json check_result_json(const CheckResult& c) {
  json j{{"name", c.name}, {"range", c.parameter_range}, {"pass", c.pass}};
  if (c.counterexample)
    j["counterexample"] = *c.counterexample;
  else
    j["counterexample"] = nullptr;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}
}  // namespace

std::string check_results_json_lines(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& c : results) {
    out += check_result_json(c).dump();
    out += '\n';
  }
  return out;
}

std::string check_results_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& c : results) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.parameter_range << ")";
    if (!c.pass && c.counterexample) {
      os << " counterexample = (";
      for (size_t i = 0; i < c.counterexample->size(); ++i)
        os << (i ? ", " : "") << (*c.counterexample)[i];
      os << "): " << c.detail;
    }
    os << "\n";
  }
  return os.str();
}

std::string check_results_csv(const std::vector<CheckResult>& results) {
  std::string out = "name,range,pass,counterexample\n";
  for (const auto& c : results) {
    std::string ce;
    if (c.counterexample) {
      for (size_t i = 0; i < c.counterexample->size(); ++i)
        ce += (i ? " " : "") + std::to_string((*c.counterexample)[i]);
    }
    out += c.name + ",\"" + c.parameter_range + "\"," + (c.pass ? "true" : "false") + "," +
           ce + "\n";
  }
  return out;
}

}  // namespace fibcensus::report
