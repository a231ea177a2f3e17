// fibcensus: exact census of Fibonacci numbers in power-of-a intervals
// [a^k, a^(k+1)), with dichotomy verification, density measurement against
// the certified fractional part of log a / log Phi, lemma checkers, and
// two-point statistics. All counting and ordering decisions are made in
// exact integer / Z[Phi] arithmetic.

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "fibcensus/density_stats.hpp"
#include "fibcensus/lemma_suite.hpp"
#include "fibcensus/rank_census.hpp"
#include "fibcensus/report_io.hpp"

namespace {

using namespace fibcensus;

struct Options {
  std::string format = "text";
  std::string out;
  int threads = 1;
  long long base = 10;
  long long k = 0;
  long long max_k = 999;
  long long n = 1000;
  int digits = 12;
  bool inject_fault = false;
  LemmaRanges lemma_ranges;
  std::vector<int> asym_pow10;
};

// Single write of the complete payload, so identical configurations produce
// byte-identical files on every run.
void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << payload;
}

std::string dump(const report::json& j) { return j.dump(2) + "\n"; }

int run_count(const Options& opt) {
  const CensusRecord rec = census(opt.base, opt.k);
  if (opt.format == "json")
    emit(opt.out, dump(report::count_json(rec)));
  else if (opt.format == "csv")
    emit(opt.out, report::count_csv(rec));
  else
    emit(opt.out, std::to_string(rec.count) + "\n");
  return 0;
}

int run_verify(const Options& opt) {
  const bool keep_records = opt.format == "csv";
  const TheoremReport rep =
      verify_theorem(opt.base, opt.max_k + 1, opt.threads, keep_records);
  if (opt.format == "json")
    emit(opt.out, dump(report::theorem_json(rep)));
  else if (opt.format == "csv")
    emit(opt.out, report::census_csv(rep.records));
  else
    emit(opt.out, report::theorem_text(rep));
  if (!rep.all_pass) {
    for (const auto& v : rep.violations)
      std::cerr << "violation: a=" << v.a << " k=" << v.k << " count=" << v.count << "\n";
    return 2;
  }
  return 0;
}

int run_density(const Options& opt) {
  const DensityReport rep = density_report(opt.base, opt.n, opt.digits, opt.threads);
  if (opt.format == "json")
    emit(opt.out, dump(report::density_json(rep)));
  else if (opt.format == "csv")
    emit(opt.out, report::density_csv(rep));
  else
    emit(opt.out, report::density_text(rep));
  return 0;
}

int run_theta(const Options& opt) {
  const ThetaApprox t = theta_approx(opt.base, opt.digits);
  if (opt.format == "json")
    emit(opt.out, dump(report::theta_json(t)));
  else if (opt.format == "csv")
    emit(opt.out, report::theta_csv(t));
  else
    emit(opt.out, report::theta_text(t));
  return 0;
}

int run_stats(const Options& opt) {
  const StatsReport rep = empirical_stats(opt.base, opt.n, opt.digits, opt.threads);
  if (opt.format == "json")
    emit(opt.out, dump(report::stats_json(rep)));
  else if (opt.format == "csv")
    emit(opt.out, report::stats_csv(rep));
  else
    emit(opt.out, report::stats_text(rep));
  return 0;
}

int run_lemmas(const Options& opt) {
  LemmaRanges ranges = opt.lemma_ranges;
  if (!opt.asym_pow10.empty()) {
    ranges.asymptotic_xs.clear();
    for (int e : opt.asym_pow10)
      ranges.asymptotic_xs.push_back(pow10(static_cast<unsigned long>(e)));
  }
  const auto results =
      run_all_checks(ranges, opt.inject_fault ? Fault::corrupt : Fault::none);
  if (opt.format == "json")
    emit(opt.out, report::check_results_json_lines(results));
  else if (opt.format == "csv")
    emit(opt.out, report::check_results_csv(results));
  else
    emit(opt.out, report::check_results_text(results));
  for (const auto& c : results)
    if (!c.pass) return 2;
  return 0;
}

int run_bench(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const CensusAggregate agg =
      census_aggregate_parallel(opt.base, opt.max_k + 1, ell(opt.base), opt.threads);
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();

  const BigNat top = pow_int(to_big(opt.base), static_cast<unsigned long>(opt.max_k + 1));
  const size_t digits = mpz_sizeinbase(top.get_mpz_t(), 10);
  report::json j{{"schema_version", report::kSchemaVersion},
                 {"a", opt.base},
                 {"intervals", opt.max_k + 1},
                 {"fib_terms", agg.count_sum},
                 {"boundary_digits", digits}};
  emit(opt.out, dump(j));
  // Timing is diagnostic only and goes to stderr, keeping the report
  // deterministic.
  std::cerr << "census_stream: " << agg.count_sum << " terms over " << (opt.max_k + 1)
            << " intervals in " << secs << " s (" << (opt.max_k + 1) / secs
            << " intervals/s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"census of Fibonacci numbers in power-of-a intervals"};
  app.set_config("--config", "", "key=value config file with option defaults");
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool with_threads = true) {
    cmd->add_option("--format,-f", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out,-o", opt.out, "write the report to a file instead of stdout");
    if (with_threads)
      cmd->add_option("--threads,-t", opt.threads, "worker cap for k-chunked runs")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  };
  const auto add_base = [&](CLI::App* cmd) {
    cmd->add_option("--base,-a", opt.base, "interval base a")
        ->check(CLI::Range(2LL, std::numeric_limits<long long>::max()))
        ->required();
  };

  auto* count = app.add_subcommand("count", "Fibonacci numbers in one interval [a^k, a^(k+1))");
  add_base(count);
  count->add_option("--k,-k", opt.k, "interval exponent")->check(CLI::NonNegativeNumber)->required();
  add_common(count, false);

  auto* verify = app.add_subcommand("verify", "check the count dichotomy for k = 0..max_k");
  add_base(verify);
  verify->add_option("--max-k,-K", opt.max_k, "largest exponent")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(verify);

  auto* density = app.add_subcommand("density", "empirical vs theoretical class densities");
  add_base(density);
  density->add_option("--n,-n", opt.n, "number of intervals")->check(CLI::PositiveNumber)->capture_default_str();
  density->add_option("--digits,-d", opt.digits, "certified decimal digits for theta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(density);

  auto* theta = app.add_subcommand("theta", "certified decimal log a / log Phi");
  add_base(theta);
  theta->add_option("--digits,-d", opt.digits, "certified decimal digits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(theta, false);

  auto* stats = app.add_subcommand("stats", "two-point count statistics, expected vs measured");
  add_base(stats);
  stats->add_option("--n,-n", opt.n, "number of intervals")->check(CLI::PositiveNumber)->capture_default_str();
  stats->add_option("--digits,-d", opt.digits, "certified decimal digits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(stats);

  auto* lemmas = app.add_subcommand("lemmas", "run every identity/lemma checker");
  lemmas->add_option("--phi-n-max", opt.lemma_ranges.phi_n_max, "power sandwich range")
      ->capture_default_str();
  lemmas->add_option("--grid-lo", opt.lemma_ranges.grid_lo, "signed grid lower bound")
      ->capture_default_str();
  lemmas->add_option("--grid-hi", opt.lemma_ranges.grid_hi, "signed grid upper bound")
      ->capture_default_str();
  lemmas->add_option("--key-n-max", opt.lemma_ranges.key_n_max)->capture_default_str();
  lemmas->add_option("--key-m-max", opt.lemma_ranges.key_m_max)->capture_default_str();
  lemmas->add_option("--hons-a-max", opt.lemma_ranges.hons_a_max)->capture_default_str();
  lemmas->add_option("--hons-k-max", opt.lemma_ranges.hons_k_max)->capture_default_str();
  lemmas->add_option("--asym-pow10", opt.asym_pow10,
                     "rank sample points as powers of ten (increasing)");
  lemmas->add_flag("--inject-fault", opt.inject_fault,
                   "self-test: corrupt each identity and demand a counterexample");
  add_common(lemmas, false);

  auto* bench = app.add_subcommand("bench", "time the streaming census");
  add_base(bench);
  bench->add_option("--max-k,-K", opt.max_k, "largest exponent")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (count->parsed()) return run_count(opt);
    if (verify->parsed()) return run_verify(opt);
    if (density->parsed()) return run_density(opt);
    if (theta->parsed()) return run_theta(opt);
    if (stats->parsed()) return run_stats(opt);
    if (lemmas->parsed()) return run_lemmas(opt);
    if (bench->parsed()) return run_bench(opt);
  } catch (const PrecisionCapExceeded& e) {
    std::cerr << "precision cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
