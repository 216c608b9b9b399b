#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hessalg/cli.hpp"

namespace py = pybind11;

namespace {

const std::vector<std::string> kNoVars;

// runs one command in json mode; exit 2 maps to ValueError, exit 1 to
// RuntimeError, each carrying the json error object as the message
std::string run_json(hessalg::cli::RunConfig config, const std::string& stdin_text = "") {
  config.output = hessalg::cli::OutputMode::json;
  std::istringstream in(stdin_text);
  std::ostringstream out;
  const int code = hessalg::cli::run(config, in, out);
  if (code == 2) throw std::invalid_argument(out.str());
  if (code != 0) throw std::runtime_error(out.str());
  return out.str();
}

void set_vars(hessalg::cli::RunConfig& config, const std::vector<std::string>& vars) {
  if (!vars.empty()) config.vars = vars;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact graded and local invariants of hypersurfaces; every function "
            "returns the json text the hessalg command line would print";

  m.def(
      "milnor",
      [](const std::string& source, const std::vector<std::string>& vars, int m_max) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::milnor;
        config.source = source;
        config.m_max = m_max;
        set_vars(config, vars);
        return run_json(config);
      },
      py::arg("source"), py::arg("vars") = kNoVars, py::arg("m_max") = 0,
      "Hilbert function of the quotient by the partial derivatives");

  m.def(
      "series",
      [](const std::string& source, int k, const std::vector<std::string>& vars, int m_max) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::series;
        config.source = source;
        config.k = k;
        config.m_max = m_max;
        set_vars(config, vars);
        return run_json(config);
      },
      py::arg("source"), py::arg("k"), py::arg("vars") = kNoVars, py::arg("m_max") = 0,
      "Hilbert function of the order-k quotient");

  m.def(
      "chi",
      [](const std::string& source, const std::vector<std::string>& vars,
         const std::string& ade, int jet_bound, bool with_mu) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::chi;
        config.source = source;
        config.ade = ade;
        config.jet_bound = jet_bound;
        config.with_mu = with_mu;
        set_vars(config, vars);
        return run_json(config);
      },
      py::arg("source") = std::string(), py::arg("vars") = kNoVars,
      py::arg("ade") = std::string(), py::arg("jet_bound") = 0, py::arg("with_mu") = false,
      "local invariant ladder of a germ, given explicitly or by catalog name");

  m.def(
      "thresholds",
      [](const std::string& source, const std::vector<std::string>& vars, int m_max) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::thresholds;
        config.source = source;
        config.m_max = m_max;
        set_vars(config, vars);
        return run_json(config);
      },
      py::arg("source"), py::arg("vars") = kNoVars, py::arg("m_max") = 0,
      "coincidence and stability degrees with the per-order bounds they imply");

  m.def(
      "count_wh",
      [](const std::string& source, const std::vector<std::string>& vars,
         std::optional<long long> m_eval) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::count_wh;
        config.source = source;
        config.m_eval = m_eval;
        set_vars(config, vars);
        return run_json(config);
      },
      py::arg("source"), py::arg("vars") = kNoVars,
      py::arg("m_eval") = std::optional<long long>(),
      "number of weighted homogeneous singular points, from stable dimensions");

  m.def(
      "reconcile",
      [](const std::string& source, const std::vector<std::string>& germs,
         const std::vector<long long>& mults, const std::vector<std::string>& germ_vars,
         const std::vector<std::string>& vars, int m_max) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::reconcile;
        config.source = source;
        config.germ_sources = germs;
        config.germ_mults = mults;
        config.germ_vars = germ_vars;
        config.m_max = m_max;
        set_vars(config, vars);
        return run_json(config);
      },
      py::arg("source"), py::arg("germs"), py::arg("mults"),
      py::arg("germ_vars") = kNoVars, py::arg("vars") = kNoVars, py::arg("m_max") = 0,
      "global stable values against multiplicity-weighted local invariants");

  m.def(
      "strata",
      [](const std::string& source, const std::vector<std::string>& params,
         const std::vector<int>& ks, const std::vector<int>& compare_ks,
         const std::vector<std::string>& vars, int m_max, std::uint64_t seed,
         int generic_count, const std::string& assignments_csv) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::strata;
        config.source = source;
        config.params = params;
        config.ks = ks;
        config.compare_ks = compare_ks;
        config.m_max = m_max;
        config.seed = seed;
        config.generic_count = generic_count;
        set_vars(config, vars);
        std::string stdin_text;
        if (!assignments_csv.empty()) {
          config.assignments_path = "-";
          stdin_text = assignments_csv;
        }
        return run_json(config, stdin_text);
      },
      py::arg("source"), py::arg("params"), py::arg("ks"),
      py::arg("compare_ks") = std::vector<int>(), py::arg("vars") = kNoVars,
      py::arg("m_max") = 0, py::arg("seed") = std::uint64_t{1}, py::arg("generic_count") = 0,
      py::arg("assignments_csv") = std::string(),
      "per-sample series of a parameterized family, grouped into strata with "
      "their order diagram");

  m.def(
      "check",
      [](const std::string& only) {
        hessalg::cli::RunConfig config;
        config.command = hessalg::cli::Command::check;
        config.only_prefix = only;
        return run_json(config);
      },
      py::arg("only") = std::string(), "run the built-in fixture corpus");
}
