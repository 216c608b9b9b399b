#ifndef HESSALG_STRATA_HPP
#define HESSALG_STRATA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hessalg/graded.hpp"
#include "hessalg/polytext.hpp"

namespace hessalg {

struct StrataSample {
  std::vector<Rational> assignment;
  std::map<int, HilbertSeq> series; // keyed by order k
  bool failed = false;
  std::string diagnostic;
};

struct StrataReport {
  std::vector<std::string> parameter_names;
  std::vector<int> ks;
  int m_max = 0; // 0 means the per-order default was used
  std::vector<StrataSample> samples;
  std::vector<std::vector<int>> strata;   // sample indices, first-seen order
  std::vector<std::pair<int, int>> covers; // (larger stratum, smaller stratum)
  std::string note;
};

// one sample per assignment; a sample whose instance cannot be processed is
// marked failed with a diagnostic and the run continues; instances of
// different degrees abort the whole run
StrataReport evaluate_family(const PolyText& family,
                             const std::vector<std::vector<Rational>>& assignments,
                             const std::vector<int>& ks, int m_max = 0);

// group samples with identical series vectors; failed samples stay ungrouped
void partition_by_series(StrataReport& report);

// cover relation of the coefficientwise partial order on the orders listed in
// compare_ks (all of report.ks when empty), rendered as a DOT digraph with
// edges from larger to smaller; CompareKMissing when an order was not computed
std::string hasse_dot(StrataReport& report, const std::vector<int>& compare_ks = {});

// reproducible small-height rational tuples: numerators in [-9, 9] excluding
// 0, denominators in [1, 4], drawn from a fixed-seed mt19937_64 stream
std::vector<std::vector<Rational>> sample_assignments(std::uint64_t seed, int count, int len);

} // namespace hessalg

#endif
