#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "carleson/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

int run_one(const std::string& command, const std::string& config_path,
            const std::string& out_path) {
  carleson::json config = carleson::json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "cannot open config file: " << config_path << "\n";
      return carleson::kStatusUsage;
    }
    try {
      in >> config;
    } catch (const std::exception& e) {
      std::cerr << "config parse error: " << e.what() << "\n";
      return carleson::kStatusUsage;
    }
  }
  const auto outcome = carleson::run_command(command, config);
  const std::string text = carleson::render_report(outcome.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return outcome.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical certification toolkit for growth-function Carleson embeddings "
               "on the upper half-plane"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  int threads = 0;

  const std::vector<std::string> commands = {
      "indices",  "classify",     "certify-box", "certify-berezin", "embed-check",
      "canonical", "witness-test", "multiplier",  "oracle-validate"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_path, "Report output path (defaults to stdout)");
    sub->add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : carleson::kStatusUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  return run_one(app.get_subcommands().front()->get_name(), config_path, out_path);
}
