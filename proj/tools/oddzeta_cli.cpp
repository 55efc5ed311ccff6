// oddzeta <mode> [flags]
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 invalid configuration,
// 3 indeterminate results (precision not reached) and no failures.

#include "oddzeta/certificate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kInvalidConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and rigorous verification of twisted well-poised linear forms in odd zeta values"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  oddzeta::RunConfig cfg;
  std::string format = "json";
  std::string out_path;
  std::string scan;
  std::string fault;

  app.add_option("--s", cfg.s, "odd number of zeta slots, >= 7")->capture_default_str();
  app.add_option("--n-min", cfg.n_min, "first n")->capture_default_str();
  app.add_option("--n-max", cfg.n_max, "last n")->capture_default_str();
  app.add_option("--precision", cfg.precision, "decimal digits of relative accuracy, >= 10")
      ->capture_default_str();
  app.add_option("--format", format, "json, csv or human")->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--scan-s", scan, "odd..odd range of s for the decay-exponent scan");
  app.add_option("--seed", cfg.seed, "seed for sample points")->capture_default_str();
  app.add_option("--max-cutoff", cfg.max_cutoff, "term limit for direct series summation")
      ->capture_default_str();
  app.add_option("--basis-n-max", cfg.basis_n_max,
                 "largest n for the zeta-basis cross-check in decay-table")
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "containment samples per operation class (selftest)")
      ->capture_default_str();
  app.add_option("--inject-fault", fault, "n,i,k: perturb one table entry (test hook)")
      ->group("");

  const char* modes[][2] = {
      {"verify-exact", "exact lemma suite, symmetry, brick oracles and ratio identities"},
      {"decay-table", "signs of 7 r_n - r^_n, u_n and the r_n / r^_n trend"},
      {"asymptotics", "saddle index, critical point and decay exponents"},
      {"zeta-table", "zeta(i) enclosures for odd i <= s"},
      {"selftest", "brick identities, Bernoulli numbers, enclosure soundness sampling"},
      {"all", "every mode in turn"},
  };
  for (const auto& m : modes) app.add_subcommand(m[0], m[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidConfig;
  }

  try {
    cfg.mode = oddzeta::parse_mode(app.get_subcommands().front()->get_name());
    cfg.format = oddzeta::parse_format(format);
    if (!scan.empty()) cfg.scan_s = oddzeta::parse_scan(scan);
    if (!fault.empty()) cfg.fault = oddzeta::parse_fault(fault);
    cfg.validate();
  } catch (const oddzeta::ConfigError& e) {
    std::cerr << "oddzeta: " << e.what() << "\n";
    return kInvalidConfig;
  }

  oddzeta::Report report;
  try {
    report = oddzeta::run(cfg);
  } catch (const oddzeta::ConfigError& e) {
    std::cerr << "oddzeta: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "oddzeta: internal error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = oddzeta::render(report, cfg.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "oddzeta: cannot write " << out_path << "\n";
      return kInvalidConfig;
    }
  }
  return oddzeta::exit_code(report.summary());
}
