#include "hessalg/strata.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hessalg/error.hpp"
#include "hessalg/hessian.hpp"

namespace hessalg {

StrataReport evaluate_family(const PolyText& family,
                             const std::vector<std::vector<Rational>>& assignments,
                             const std::vector<int>& ks, int m_max) {
  if (ks.empty()) fail(Errc::bad_config, "at least one order is required");
  StrataReport report;
  report.parameter_names = family.parameter_names;
  report.ks = ks;
  report.m_max = m_max;

  const std::vector<Polynomial> instances = parse_family(family, assignments);

  int common_degree = -1;
  for (const auto& inst : instances) {
    if (inst.is_zero() || !inst.is_homogeneous() || inst.degree() < 2) continue;
    if (common_degree < 0) {
      common_degree = inst.degree();
    } else if (inst.degree() != common_degree) {
      fail(Errc::mixed_degrees, "family instances have degrees " +
                                    std::to_string(common_degree) + " and " +
                                    std::to_string(inst.degree()));
    }
  }

  for (size_t i = 0; i < instances.size(); ++i) {
    StrataSample sample;
    sample.assignment = assignments[i];
    try {
      for (int k : ks) sample.series[k] = hessian_algebra_series(instances[i], k, m_max);
    } catch (const Error& e) {
      sample.failed = true;
      sample.series.clear();
      sample.diagnostic = std::string(e.code_name()) + ": " + e.what();
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

namespace {

std::string series_key(const StrataSample& sample, const std::vector<int>& ks) {
  std::ostringstream key;
  for (int k : ks) {
    key << 'k' << k << ':';
    for (long long c : sample.series.at(k).coeffs) key << c << ',';
    key << ';';
  }
  return key.str();
}

enum class Cmp { equal, greater, smaller, incomparable };

Cmp compare_samples(const StrataSample& a, const StrataSample& b, const std::vector<int>& ks) {
  bool some_gt = false, some_lt = false;
  for (int k : ks) {
    const auto& ca = a.series.at(k).coeffs;
    const auto& cb = b.series.at(k).coeffs;
    const size_t len = std::max(ca.size(), cb.size());
    for (size_t m = 0; m < len; ++m) {
      const long long va = a.series.at(k).value_at(static_cast<long long>(m));
      const long long vb = b.series.at(k).value_at(static_cast<long long>(m));
      if (va > vb) some_gt = true;
      if (va < vb) some_lt = true;
    }
  }
  if (some_gt && some_lt) return Cmp::incomparable;
  if (some_gt) return Cmp::greater;
  if (some_lt) return Cmp::smaller;
  return Cmp::equal;
}

} // namespace

void partition_by_series(StrataReport& report) {
  report.strata.clear();
  std::map<std::string, size_t> seen;
  for (size_t i = 0; i < report.samples.size(); ++i) {
    if (report.samples[i].failed) continue;
    const std::string key = series_key(report.samples[i], report.ks);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, report.strata.size());
      report.strata.push_back({static_cast<int>(i)});
    } else {
      report.strata[it->second].push_back(static_cast<int>(i));
    }
  }
}

std::string hasse_dot(StrataReport& report, const std::vector<int>& compare_ks) {
  std::vector<int> ks = compare_ks.empty() ? report.ks : compare_ks;
  for (int k : ks)
    if (std::find(report.ks.begin(), report.ks.end(), k) == report.ks.end())
      fail(Errc::compare_k_missing,
           "order " + std::to_string(k) + " was not computed for this family");
  if (report.strata.empty()) partition_by_series(report);

  const size_t count = report.strata.size();
  std::vector<std::vector<bool>> strict(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      const auto& a = report.samples[static_cast<size_t>(report.strata[i][0])];
      const auto& b = report.samples[static_cast<size_t>(report.strata[j][0])];
      strict[i][j] = compare_samples(a, b, ks) == Cmp::greater;
    }
  }

  report.note =
      "cover edges indicate that the series can only drop from the larger stratum "
      "to the smaller one; no claim is made that the closures are adjacent";

  std::ostringstream dot;
  dot << "digraph hessian_strata {\n";
  dot << "  comment=\"" << report.note << "\";\n";
  dot << "  rankdir=TB;\n";
  for (size_t i = 0; i < count; ++i) {
    const auto& rep = report.samples[static_cast<size_t>(report.strata[i][0])];
    dot << "  S" << i + 1 << " [label=\"S" << i + 1;
    for (int k : report.ks) {
      dot << "\\nk=" << k << ":";
      for (long long c : rep.series.at(k).coeffs) dot << ' ' << c;
    }
    dot << "\"];\n";
  }
  report.covers.clear();
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      if (!strict[i][j]) continue;
      bool covered = true;
      for (size_t l = 0; l < count && covered; ++l)
        if (strict[i][l] && strict[l][j]) covered = false;
      if (covered) {
        dot << "  S" << i + 1 << " -> S" << j + 1 << ";\n";
        report.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  dot << "}\n";
  return dot.str();
}

std::vector<std::vector<Rational>> sample_assignments(std::uint64_t seed, int count, int len) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> tuple;
    tuple.reserve(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) {
      long long num = 0;
      while (num == 0) num = static_cast<long long>(rng() % 19) - 9;
      const long long den = static_cast<long long>(rng() % 4) + 1;
      Rational value =
          Rational(BigInt(static_cast<long>(num))) / Rational(BigInt(static_cast<long>(den)));
      tuple.push_back(std::move(value));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

} // namespace hessalg
