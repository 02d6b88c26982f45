// Batch driver: anselberg verify <suite> [flags] | anselberg report --in FILE
#include "anselberg/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace anselberg;

int main(int argc, char** argv) {
  CLI::App app{"A_n Selberg integral and Macdonald identity verifier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string);

  auto* verify = app.add_subcommand("verify", "run a verification suite and emit a report");
  std::string suite, config_path;
  verify->add_option("suite", suite, "symbolic | qseries | integrals | all");
  verify->add_option("--config", config_path, "key=value file; flags override it");
  // every config key is also a string flag, so that only flags actually given
  // take part in the merge
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flag_opts;
  const std::map<std::string, std::string> help = {
      {"n", "number of groups, must equal the length of --k"},
      {"k", "comma list k_1 <= ... <= k_n"},
      {"alpha", "alpha_n"},
      {"beta", "comma list, one per group or a single value"},
      {"gamma", "coupling"},
      {"variant", "finite | exp1 | exp2 | jack"},
      {"mu", "Jack partition as a comma list"},
      {"q", "base of the q-integral"},
      {"trunc", "q-integral truncation weight W"},
      {"samples", "Monte Carlo draws, e.g. 1e6"},
      {"seed", "random seed"},
      {"workers", "independent random streams / threads"},
      {"precision", "double | extended closed forms"},
      {"format", "json | csv"},
      {"out", "output path, stdout when absent"},
      {"max-weight", "symbolic suite weight bound"},
      {"max-n", "symbolic suite number of groups bound"}};
  for (const auto& [key, text] : help) flag_opts[key] = verify->add_option("--" + key, flag_values[key], text);

  auto* report = app.add_subcommand("report", "re-emit a stored JSON report");
  std::string in_path, out_path, format = "json";
  report->add_option("--in", in_path, "JSON report")->required();
  report->add_option("--format", format, "json | csv");
  report->add_option("--out", out_path, "output path, stdout when absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      ConfigMap cfg = default_config();
      if (!config_path.empty()) cfg = merge_config(cfg, read_config_file(config_path));
      ConfigMap flags;
      for (const auto& [key, opt] : flag_opts)
        if (opt->count()) flags[key] = flag_values[key];
      if (!suite.empty()) flags["suite"] = suite;
      cfg = merge_config(cfg, flags);
      const SuiteConfig sc = parse_suite_config(cfg);
      const Report r = run_suite(sc, cfg);
      write_report(r, sc.format, sc.out);
      return r.all_pass() ? 0 : 1;
    }
    std::ifstream f(in_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + in_path);
    std::stringstream ss;
    ss << f.rdbuf();
    const Report r = parse_report_json(ss.str());
    write_report(r, parse_format(format), out_path);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
