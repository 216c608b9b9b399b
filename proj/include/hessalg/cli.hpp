#ifndef HESSALG_CLI_HPP
#define HESSALG_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hessalg::cli {

enum class Command { milnor, series, chi, thresholds, count_wh, reconcile, strata, check };
enum class OutputMode { text, json, dot };

struct RunConfig {
  Command command = Command::milnor;
  std::vector<std::string> vars = {"x", "y", "z"};
  std::string source;                    // polynomial, germ, or family; "-" reads stdin
  std::vector<std::string> params;       // family parameter names
  std::string ade;                       // chi: catalog germ name
  int k = 0;                             // series order
  std::vector<int> ks;                   // strata orders
  std::vector<int> compare_ks;           // strata: orders entering the diagram
  int m_max = 0;                         // 0 keeps each operation's default
  std::optional<long long> m_eval;       // count-wh evaluation degree
  int jet_bound = 0;                     // local truncation bound, 0 = automatic
  bool with_mu = false;
  OutputMode output = OutputMode::text;
  std::uint64_t seed = 1;
  int generic_count = 0;                 // strata: sampled assignments
  std::string assignments_path;          // strata: csv of assignments, "-" reads stdin
  std::vector<std::string> germ_sources; // reconcile
  std::vector<long long> germ_mults;     // reconcile
  std::vector<std::string> germ_vars;    // reconcile: local ring names, default y1..yn
  std::string only_prefix;               // check
};

// executes one command; returns 0 on success, 1 on a computation error,
// 2 on a usage error; `in` backs any "-" source
int run(const RunConfig& config, std::istream& in, std::ostream& out);

} // namespace hessalg::cli

#endif
