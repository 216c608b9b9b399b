#include "hessalg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hessalg/error.hpp"
#include "hessalg/fixtures.hpp"
#include "hessalg/hessian.hpp"
#include "hessalg/localalg.hpp"
#include "hessalg/polytext.hpp"
#include "hessalg/strata.hpp"

namespace hessalg::cli {

using nlohmann::json;

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string resolve_source(const RunConfig& cfg, std::istream& in) {
  if (cfg.source.empty()) fail(Errc::bad_config, "no input polynomial was given");
  if (cfg.source == "-") return slurp(in);
  return cfg.source;
}

Polynomial parse_input(const RunConfig& cfg, std::istream& in) {
  PolyText text;
  text.source = resolve_source(cfg, in);
  text.variable_names = cfg.vars;
  return parse_polynomial(text);
}

std::vector<std::string> default_germ_vars(int n) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  return vars;
}

json series_json(const HilbertSeq& seq) {
  json out;
  size_t keep = seq.coeffs.size();
  if (seq.tail && static_cast<size_t>(seq.tail->stable_from) < keep)
    keep = static_cast<size_t>(seq.tail->stable_from);
  out["coeffs"] = std::vector<long long>(seq.coeffs.begin(),
                                         seq.coeffs.begin() + static_cast<long>(keep));
  out["stable_from"] = seq.tail ? json(seq.tail->stable_from) : json();
  out["stable_value"] = seq.tail ? json(seq.tail->stable_value) : json();
  return out;
}

std::string series_text(const HilbertSeq& seq) {
  std::ostringstream out;
  size_t keep = seq.coeffs.size();
  if (seq.tail && static_cast<size_t>(seq.tail->stable_from) < keep)
    keep = static_cast<size_t>(seq.tail->stable_from);
  for (size_t m = 0; m < keep; ++m) {
    if (m) out << ' ';
    out << seq.coeffs[m];
  }
  if (seq.tail)
    out << " | stable value " << seq.tail->stable_value << " from degree "
        << seq.tail->stable_from;
  else
    out << " | no certified tail in range";
  return out.str();
}

int emit_series(const RunConfig& cfg, std::ostream& out, const HilbertSeq& seq,
                std::optional<int> k) {
  if (cfg.output == OutputMode::json) {
    json j = series_json(seq);
    j["m_max"] = static_cast<long long>(seq.coeffs.size()) - 1;
    if (k) j["k"] = *k;
    out << j.dump(2) << '\n';
  } else {
    if (k) out << "k " << *k << ": ";
    out << series_text(seq) << '\n';
  }
  return 0;
}

int cmd_milnor(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  return emit_series(cfg, out, milnor_series(parse_input(cfg, in), cfg.m_max), std::nullopt);
}

int cmd_series(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  return emit_series(cfg, out, hessian_algebra_series(parse_input(cfg, in), cfg.k, cfg.m_max),
                     cfg.k);
}

int cmd_chi(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Polynomial germ(0);
  if (!cfg.ade.empty()) {
    const AdeGerm* entry = ade_lookup(cfg.ade);
    if (!entry) fail(Errc::bad_config, "unknown catalog germ " + cfg.ade);
    PolyText text{entry->source, default_germ_vars(entry->n), {}};
    germ = parse_polynomial(text);
  } else {
    PolyText text;
    text.source = resolve_source(cfg, in);
    text.variable_names = cfg.vars;
    germ = parse_polynomial(text);
  }
  const LocalInvariants inv = chi_invariants(germ, cfg.jet_bound, cfg.with_mu);
  if (cfg.output == OutputMode::json) {
    json j;
    j["n"] = inv.n;
    j["chi"] = inv.chi;
    j["tau"] = inv.tau;
    j["mu"] = inv.mu ? json(*inv.mu) : json();
    j["smooth"] = inv.smooth;
    out << j.dump(2) << '\n';
  } else {
    out << "chi:";
    for (long long value : inv.chi) out << ' ' << value;
    out << " | tau " << inv.tau;
    if (inv.mu) out << " | mu " << *inv.mu;
    if (inv.smooth) out << " | smooth";
    out << '\n';
  }
  return 0;
}

json opt_json(const std::optional<long long>& value) {
  return value ? json(*value) : json();
}

std::string opt_text(const std::optional<long long>& value) {
  return value ? std::to_string(*value) : std::string("absent");
}

int cmd_thresholds(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Thresholds t = thresholds(parse_input(cfg, in), cfg.m_max);
  if (cfg.output == OutputMode::json) {
    json j;
    j["n"] = t.n;
    j["d"] = t.d;
    j["T"] = t.T;
    j["ct"] = opt_json(t.ct);
    j["mdr"] = opt_json(t.mdr);
    j["st"] = opt_json(t.st);
    j["tau_total"] = opt_json(t.tau_total);
    j["tilde_T"] = t.tilde_T;
    j["T_k"] = t.T_k ? json(*t.T_k) : json();
    j["hat_T"] = t.hat_T ? json(*t.hat_T) : json();
    j["smooth"] = t.smooth;
    if (!t.note.empty()) j["note"] = t.note;
    out << j.dump(2) << '\n';
  } else {
    out << "n " << t.n << ", d " << t.d << ", T " << t.T << '\n';
    out << "ct " << opt_text(t.ct) << ", mdr " << opt_text(t.mdr) << ", st " << opt_text(t.st)
        << ", tau " << opt_text(t.tau_total) << (t.smooth ? ", smooth" : "") << '\n';
    auto line = [&out](const char* name, const std::vector<long long>& values) {
      out << name;
      for (long long v : values) out << ' ' << v;
      out << '\n';
    };
    line("tilde_T:", t.tilde_T);
    if (t.T_k) line("T_k:", *t.T_k);
    if (t.hat_T) line("hat_T:", *t.hat_T);
    if (!t.note.empty()) out << "note: " << t.note << '\n';
  }
  return 0;
}

int cmd_count_wh(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const CountWh c = count_weighted_homogeneous(parse_input(cfg, in), cfg.m_eval);
  if (cfg.output == OutputMode::json) {
    json j;
    j["count"] = c.count;
    j["smooth"] = c.smooth;
    j["m_eval"] = c.m_eval;
    j["milnor_dim"] = c.milnor_dim;
    j["hn_dim"] = c.hn_dim;
    out << j.dump(2) << '\n';
  } else {
    if (c.smooth)
      out << "smooth, count 0\n";
    else
      out << "count " << c.count << " = " << c.milnor_dim << " - " << c.hn_dim
          << " at degree " << c.m_eval << '\n';
  }
  return 0;
}

int cmd_reconcile(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Polynomial f = parse_input(cfg, in);
  if (cfg.germ_sources.empty()) fail(Errc::bad_config, "no germs were given");
  if (cfg.germ_sources.size() != cfg.germ_mults.size())
    fail(Errc::bad_config, "each germ needs exactly one multiplicity");
  const int n = f.vars() - 1;
  std::vector<std::string> germ_vars =
      cfg.germ_vars.empty() ? default_germ_vars(n) : cfg.germ_vars;
  std::vector<std::pair<Polynomial, long long>> germs;
  for (size_t i = 0; i < cfg.germ_sources.size(); ++i) {
    if (cfg.germ_mults[i] < 1) fail(Errc::bad_config, "multiplicities must be positive");
    PolyText text{cfg.germ_sources[i], germ_vars, {}};
    germs.emplace_back(parse_polynomial(text), cfg.germ_mults[i]);
  }
  const ReconcileReport report = reconcile_global_local(f, germs, cfg.m_max);
  if (cfg.output == OutputMode::json) {
    json rows = json::array();
    for (const auto& row : report.rows)
      rows.push_back({{"k", row.k},
                      {"global_stable", row.global_stable},
                      {"local_sum", row.local_sum},
                      {"ok", row.ok}});
    json j;
    j["ok"] = report.ok;
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& row : report.rows)
      out << "k " << row.k << ": global " << row.global_stable << ", local " << row.local_sum
          << (row.ok ? " (match)" : " (MISMATCH)") << '\n';
    out << (report.ok ? "reconciled\n" : "NOT reconciled\n");
  }
  return report.ok ? 0 : 1;
}

std::vector<std::vector<Rational>> read_assignments_csv(std::istream& stream) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<Rational> row;
    std::string cell;
    std::istringstream cells(line);
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_strata(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.params.empty()) fail(Errc::bad_config, "a family needs parameter names");
  PolyText family;
  family.source = resolve_source(cfg, in);
  family.variable_names = cfg.vars;
  family.parameter_names = cfg.params;

  std::vector<std::vector<Rational>> assignments;
  if (!cfg.assignments_path.empty()) {
    if (cfg.assignments_path == "-") {
      assignments = read_assignments_csv(in);
    } else {
      std::ifstream file(cfg.assignments_path);
      if (!file) fail(Errc::bad_config, "cannot open " + cfg.assignments_path);
      assignments = read_assignments_csv(file);
    }
  }
  if (cfg.generic_count > 0) {
    auto sampled = sample_assignments(cfg.seed, cfg.generic_count,
                                      static_cast<int>(cfg.params.size()));
    for (auto& tuple : sampled) assignments.push_back(std::move(tuple));
  }
  if (assignments.empty())
    fail(Errc::bad_config, "no assignments: pass a csv or a generic sample count");

  const std::vector<int> ks = cfg.ks.empty() ? std::vector<int>{1} : cfg.ks;
  StrataReport report = evaluate_family(family, assignments, ks, cfg.m_max);
  partition_by_series(report);
  const std::string dot = hasse_dot(report, cfg.compare_ks);

  if (cfg.output == OutputMode::dot) {
    out << dot;
    return 0;
  }
  if (cfg.output == OutputMode::json) {
    json samples = json::array();
    for (const auto& sample : report.samples) {
      json s;
      json assignment = json::array();
      for (const auto& value : sample.assignment) assignment.push_back(render_rational(value));
      s["assignment"] = assignment;
      s["failed"] = sample.failed;
      if (sample.failed) {
        s["diagnostic"] = sample.diagnostic;
      } else {
        json series;
        for (const auto& [k, seq] : sample.series) series[std::to_string(k)] = series_json(seq);
        s["series"] = series;
      }
      samples.push_back(std::move(s));
    }
    json j;
    j["ks"] = report.ks;
    j["samples"] = samples;
    j["strata"] = report.strata;
    json covers = json::array();
    for (const auto& [hi, lo] : report.covers)
      covers.push_back(json::array({hi, lo}));
    j["covers"] = covers;
    j["note"] = report.note;
    j["dot"] = dot;
    out << j.dump(2) << '\n';
  } else {
    for (size_t s = 0; s < report.strata.size(); ++s) {
      out << 'S' << s + 1 << " (" << report.strata[s].size() << " sample"
          << (report.strata[s].size() == 1 ? "" : "s") << ")";
      const auto& rep = report.samples[static_cast<size_t>(report.strata[s][0])];
      for (int k : report.ks) out << " | k " << k << ": " << series_text(rep.series.at(k));
      out << '\n';
    }
    for (const auto& [hi, lo] : report.covers)
      out << 'S' << hi + 1 << " > S" << lo + 1 << '\n';
    int failed = 0;
    for (const auto& sample : report.samples) failed += sample.failed ? 1 : 0;
    if (failed) out << failed << " sample(s) failed and were set aside\n";
    out << "note: " << report.note << '\n';
  }
  return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const std::vector<FixtureOutcome> outcomes = run_fixtures(cfg.only_prefix);
  bool all_pass = true;
  if (cfg.output == OutputMode::json) {
    json results = json::array();
    for (const auto& outcome : outcomes) {
      all_pass = all_pass && outcome.pass;
      results.push_back({{"id", outcome.id},
                         {"provenance", outcome.provenance},
                         {"pass", outcome.pass},
                         {"detail", outcome.detail}});
    }
    json j;
    j["all_pass"] = all_pass;
    j["results"] = results;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& outcome : outcomes) {
      all_pass = all_pass && outcome.pass;
      out << (outcome.pass ? "[PASS] " : "[FAIL] ") << outcome.id << ": " << outcome.detail
          << '\n';
    }
    out << (all_pass ? "all fixtures pass\n" : "some fixtures FAILED\n");
  }
  return all_pass ? 0 : 1;
}

} // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out) {
  try {
    switch (config.command) {
      case Command::milnor: return cmd_milnor(config, in, out);
      case Command::series: return cmd_series(config, in, out);
      case Command::chi: return cmd_chi(config, in, out);
      case Command::thresholds: return cmd_thresholds(config, in, out);
      case Command::count_wh: return cmd_count_wh(config, in, out);
      case Command::reconcile: return cmd_reconcile(config, in, out);
      case Command::strata: return cmd_strata(config, in, out);
      case Command::check: return cmd_check(config, out);
    }
    fail(Errc::bad_config, "unknown command");
  } catch (const Error& e) {
    if (config.output == OutputMode::json) {
      json err;
      err["error"] = {{"code", e.code_name()},
                      {"message", e.what()},
                      {"position", e.position() >= 0 ? json(e.position()) : json()}};
      out << err.dump(2) << '\n';
    } else {
      out << "error [" << e.code_name() << "]: " << e.what();
      if (e.position() >= 0) out << " (at position " << e.position() << ')';
      out << '\n';
    }
    return e.code() == Errc::bad_config ? 2 : 1;
  }
}

} // namespace hessalg::cli
