// zagreb: multiplicative Zagreb indices of trees, extremal constructions and
// exhaustive verification.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  namespace cli = zagreb::cli;

  CLI::App app{"Multiplicative Zagreb indices of trees with k maximum-degree vertices"};
  app.require_subcommand(1);

  cli::ComputeOptions compute_opt;
  std::string input = "-";
  auto* compute = app.add_subcommand("compute", "Indices of trees read as graph6 lines or edge lists");
  compute->add_option("--format", compute_opt.format, "json|table")->capture_default_str();
  compute->add_option("input", input, "Input file, '-' for stdin")->capture_default_str();

  cli::ConstructOptions construct_opt;
  auto* construct = app.add_subcommand("construct", "Build an extremal tree of T(n,k)");
  construct->add_option("--n", construct_opt.n, "Number of vertices")->required();
  construct->add_option("--k", construct_opt.k, "Number of maximum-degree vertices")->required();
  construct->add_option("--index", construct_opt.index, "pi1|pi2")->required();
  construct->add_option("--goal", construct_opt.goal, "min|max")->required();
  construct->add_option("--format", construct_opt.format, "graph6|edgelist|json")
      ->capture_default_str();

  cli::VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check every bound against exhaustive enumeration");
  verify->add_option("--n-max", verify_opt.n_max, "Largest order to enumerate")->required();
  verify->add_option("--report", verify_opt.report_path, "Write report (.csv for CSV, else JSON)");
  verify->add_option("--jobs", verify_opt.jobs, "Worker threads")
      ->envname("ZAGREB_JOBS")
      ->capture_default_str();

  cli::TableOptions table_opt;
  auto* table = app.add_subcommand("table", "Closed-form bounds for a range of orders");
  table->add_option("--n-from", table_opt.n_from, "First order")->required();
  table->add_option("--n-to", table_opt.n_to, "Last order")->required();
  table->add_option("--format", table_opt.format, "csv|text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kDomainError;
  }

  if (compute->parsed()) {
    if (input == "-") return cli::run_compute(compute_opt, std::cin, std::cout, std::cerr);
    std::ifstream file(input);
    if (!file) {
      std::cerr << "error: cannot open " << input << '\n';
      return cli::kParseError;
    }
    return cli::run_compute(compute_opt, file, std::cout, std::cerr);
  }
  if (construct->parsed()) return cli::run_construct(construct_opt, std::cout, std::cerr);
  if (verify->parsed()) return cli::run_verify(verify_opt, std::cout, std::cerr);
  return cli::run_table(table_opt, std::cout, std::cerr);
}
