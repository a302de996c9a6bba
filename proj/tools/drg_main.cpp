// drg: extensions of a finite group by a reductive group, from root data.
//
//   drg classify --input problems/sl2_z2.json --format json

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "drg/errors.hpp"
#include "drg/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Disconnected reductive groups: centers, Weyl groups, diagram automorphisms and H^2 classifications"};
  app.require_subcommand(1, 1);

  std::string input;
  std::optional<std::string> format;
  std::optional<std::size_t> max_k, budget;
  std::uint64_t seed = 1;
  for (const char* name : {"classify", "weyl", "dynkin", "center", "check"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input,-i", input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-k", max_k, "torsion tower cap");
    sub->add_option("--budget", budget, "cohomology size cap: |Gamma|^3 * coordinates");
    sub->add_option("--seed", seed, "seed for randomized checks");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  std::string fmt = format.value_or("text");
  drg::Report report;
  try {
    drg::ProblemFile problem = drg::parse_problem(input);
    if (!format) fmt = problem.options.format;
    drg::RunOptions opt;
    opt.max_k = max_k.value_or(problem.options.max_k);
    opt.budget = budget.value_or(problem.options.budget);
    opt.seed = seed;
    report = drg::run(command, problem, opt);
  } catch (const drg::ValidationError& e) {
    report = drg::error_report(command, "validation", e.what());
  } catch (const drg::BudgetExceeded& e) {
    report = drg::error_report(command, "budget", e.what());
  } catch (const std::exception& e) {
    report = drg::error_report(command, "internal", e.what());
  }
  if (fmt == "json")
    std::cout << drg::report_to_json(report);
  else
    (report.error ? std::cerr : std::cout) << drg::report_to_text(report);
  return report.exit_code();
}
