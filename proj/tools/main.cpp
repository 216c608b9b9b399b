#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hessalg/cli.hpp"

using hessalg::cli::Command;
using hessalg::cli::OutputMode;
using hessalg::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"graded quotients of a projective hypersurface by its Jacobian ideal "
               "together with minors of the second-derivative matrix"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output = "text";
  bool json_flag = false;
  long long m_eval = -1;

  auto add_output = [&](CLI::App* sub, bool with_dot) {
    sub->add_option("--output", output, "output format")
        ->check(CLI::IsMember(with_dot ? std::vector<std::string>{"text", "json", "dot"}
                                       : std::vector<std::string>{"text", "json"}));
    sub->add_flag("--json", json_flag, "shorthand for --output json");
  };
  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.source, "polynomial source text, or - for stdin")->required();
    sub->add_option("--vars", cfg.vars, "variable names")->delimiter(',');
    sub->add_option("--m-max", cfg.m_max, "largest degree to compute, 0 for the default");
  };

  CLI::App* milnor = app.add_subcommand("milnor", "Hilbert function of the Jacobian quotient");
  add_form(milnor);
  add_output(milnor, false);
  milnor->callback([&] { cfg.command = Command::milnor; });

  CLI::App* series = app.add_subcommand(
      "series", "Hilbert function of the quotient by the Jacobian ideal plus order-k minors");
  add_form(series);
  series->add_option("--k", cfg.k, "minor order, 1..n+1")->required();
  add_output(series, false);
  series->callback([&] { cfg.command = Command::series; });

  CLI::App* chi = app.add_subcommand("chi", "local invariant ladder of an isolated germ");
  cfg.vars = {"x", "y", "z"};
  chi->add_option("--germ", cfg.source, "germ source text, or - for stdin");
  chi->add_option("--ade", cfg.ade, "catalog germ name (A1..A5, D4, D5, E6..E8, A1_3)");
  chi->add_option("--vars", cfg.vars, "local ring variable names")->delimiter(',');
  chi->add_option("--jet-bound", cfg.jet_bound, "truncation bound, 0 for automatic");
  chi->add_flag("--with-mu", cfg.with_mu, "also report the Milnor number");
  add_output(chi, false);
  chi->callback([&] {
    cfg.command = Command::chi;
    if (cfg.ade.empty() && cfg.source.empty())
      throw CLI::RequiredError("--germ or --ade");
    static const std::vector<std::string> germ_defaults = {"y1", "y2"};
    if (chi->count("--vars") == 0 && cfg.ade.empty()) cfg.vars = germ_defaults;
  });

  CLI::App* thresholds =
      app.add_subcommand("thresholds", "coincidence, stability, and syzygy degrees");
  add_form(thresholds);
  add_output(thresholds, false);
  thresholds->callback([&] { cfg.command = Command::thresholds; });

  CLI::App* count_wh = app.add_subcommand(
      "count-wh", "count the singular points with weighted homogeneous germ");
  add_form(count_wh);
  count_wh->add_option("--m-eval", m_eval, "evaluation degree, negative for the default");
  add_output(count_wh, false);
  count_wh->callback([&] {
    cfg.command = Command::count_wh;
    if (m_eval >= 0) cfg.m_eval = m_eval;
  });

  CLI::App* reconcile = app.add_subcommand(
      "reconcile", "stable global dimensions against multiplicity-weighted local invariants");
  add_form(reconcile);
  reconcile->add_option("--germ", cfg.germ_sources, "germ source text, repeatable");
  reconcile->add_option("--mult", cfg.germ_mults, "multiplicity for each germ, repeatable");
  reconcile->add_option("--germ-vars", cfg.germ_vars, "local ring variable names")
      ->delimiter(',');
  add_output(reconcile, false);
  reconcile->callback([&] { cfg.command = Command::reconcile; });

  CLI::App* strata = app.add_subcommand(
      "strata", "partition a parameter family by its series and draw the order diagram");
  strata->add_option("--family", cfg.source, "family template, or - for stdin")->required();
  strata->add_option("--vars", cfg.vars, "variable names")->delimiter(',');
  strata->add_option("--params", cfg.params, "parameter names")->delimiter(',')->required();
  strata->add_option("--k", cfg.ks, "minor orders to compute, repeatable")->delimiter(',');
  strata->add_option("--compare-k", cfg.compare_ks,
                     "orders entering the diagram, repeatable; all computed orders when absent")
      ->delimiter(',');
  strata->add_option("--m-max", cfg.m_max, "largest degree to compute, 0 for the default");
  strata->add_option("--assignments", cfg.assignments_path,
                     "csv of parameter tuples (entries like 2 or -1/3), or - for stdin");
  strata->add_option("--generic", cfg.generic_count, "number of sampled generic tuples");
  strata->add_option("--seed", cfg.seed, "sampling seed");
  add_output(strata, true);
  strata->callback([&] { cfg.command = Command::strata; });

  CLI::App* check = app.add_subcommand("check", "run the built-in fixture corpus");
  check->add_option("--only", cfg.only_prefix, "restrict to fixture ids with this prefix");
  add_output(check, false);
  check->callback([&] { cfg.command = Command::check; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (json_flag) {
    cfg.output = OutputMode::json;
  } else if (output == "json") {
    cfg.output = OutputMode::json;
  } else if (output == "dot") {
    cfg.output = OutputMode::dot;
  } else {
    cfg.output = OutputMode::text;
  }
  return hessalg::cli::run(cfg, std::cin, std::cout);
}
