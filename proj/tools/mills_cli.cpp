// mills: evaluate Mills-ratio approximants, write error tables and figure
// data, and run the self-checks.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mills/report.hpp"

namespace rep = mills::report;

int main(int argc, char** argv) {
  CLI::App app{"Continued-fraction approximations of Gaussian and Gamma Mills ratios"};
  app.require_subcommand(1);

  rep::EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one approximant against the reference");
  eval_cmd->add_option("--x", eval.x, "argument")->required();
  eval_cmd->add_option("--n", eval.n, "index of the last numerator")->required();
  eval_cmd->add_option("--family", eval.family.family, "terminating denominator family");
  eval_cmd->add_option("--variant", eval.family.variant, "improved-expo slope: sqrt-r or plain-r");
  eval_cmd->add_option("--custom-table", eval.family.custom_table, "x,beta table for custom");

  rep::TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "CSV of approximant, reference and error on a grid");
  table_cmd->add_option("--xmin", table.xmin);
  table_cmd->add_option("--xmax", table.xmax);
  table_cmd->add_option("--step", table.step);
  table_cmd->add_option("--n", table.n);
  table_cmd->add_option("--family", table.family.family);
  table_cmd->add_option("--variant", table.family.variant);
  table_cmd->add_option("--custom-table", table.family.custom_table);
  table_cmd->add_option("--out", table.out, "output file (default stdout)");

  rep::MaxErrArgs maxerr;
  auto* maxerr_cmd = app.add_subcommand("maxerr", "max |Delta_n| over an interval");
  maxerr_cmd->add_option("--nmin", maxerr.nmin);
  maxerr_cmd->add_option("--nmax", maxerr.nmax);
  maxerr_cmd->add_option("--xmin", maxerr.xmin);
  maxerr_cmd->add_option("--xmax", maxerr.xmax);
  maxerr_cmd->add_option("--step", maxerr.step);
  maxerr_cmd->add_option("--family", maxerr.family.family);
  maxerr_cmd->add_option("--variant", maxerr.family.variant);
  maxerr_cmd->add_option("--custom-table", maxerr.family.custom_table);

  rep::FigureArgs figure;
  auto* figure_cmd = app.add_subcommand("figure", "Delta_n curves on [0, 6] for n = 0, 1, 4");
  figure_cmd->add_option("--id", figure.id, "1, 2 or 3")->required();
  figure_cmd->add_option("--out", figure.out, "output file (default stdout)");
  figure_cmd->add_option("--variant", figure.variant);
  figure_cmd->add_option("--custom-table", figure.custom_table, "extra custom column");

  rep::VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--suite", verify.suites, "suite name (repeatable)");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rep::kUsage;
  }

  if (*eval_cmd) return rep::run_eval(eval, std::cout, std::cerr);
  if (*table_cmd) return rep::run_table(table, std::cout, std::cerr);
  if (*maxerr_cmd) return rep::run_maxerr(maxerr, std::cout, std::cerr);
  if (*figure_cmd) return rep::run_figure(figure, std::cout, std::cerr);
  return rep::run_verify(verify, std::cout, std::cerr);
}
