#ifndef HESSALG_HESSIAN_HPP
#define HESSALG_HESSIAN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hessalg/graded.hpp"
#include "hessalg/localalg.hpp"
#include "hessalg/polynomial.hpp"

namespace hessalg {

// largest degree from which every order-k quotient of a degree-d form in
// n + 1 variables is provably constant
long long stabilization_bound(int n, int d, int k);

// Hilbert function of the Jacobian quotient of a smooth degree-d form,
// computed from the closed product formula
HilbertSeq smooth_reference_series(int n, int d, int m_max = 0);

// Hilbert function of S / (partial derivatives); m_max = 0 takes the first
// certified bound, (n + 1)(d - 2) + 1
HilbertSeq milnor_series(const Polynomial& f, int m_max = 0);

// Hilbert function of S / (partial derivatives + order-k minors of the
// second-derivative matrix); m_max = 0 takes the certified bound for k
HilbertSeq hessian_algebra_series(const Polynomial& f, int k, int m_max = 0);

struct Thresholds {
  int n = 0;
  int d = 0;
  long long T = 0;
  std::optional<long long> ct;
  std::optional<long long> mdr;
  std::optional<long long> st;
  std::optional<long long> tau_total;
  std::vector<long long> tilde_T;                 // k = 1..n+1
  std::optional<std::vector<long long>> T_k;      // k = 1..n+1, needs ct and st
  std::optional<std::vector<long long>> hat_T;    // k = 1..n+1, needs ct
  bool smooth = false;
  std::string note;
};

// coincidence and stability degrees of the Jacobian quotient plus the derived
// per-order stabilization bounds; InsufficientRange unless m_max > (n+1)(d-2)
Thresholds thresholds(const Polynomial& f, int m_max = 0);

struct CountWh {
  long long count = 0;
  bool smooth = false;
  long long m_eval = 0;
  long long milnor_dim = 0;
  long long hn_dim = 0;
};

// number of singular points whose germ is weighted homogeneous, read off as a
// difference of two graded dimensions in a stable degree
CountWh count_weighted_homogeneous(const Polynomial& f, std::optional<long long> m_eval = std::nullopt);

struct PropAVerdict {
  int case_index = 0; // 1 = smooth, 2 = singular
  bool ok = false;
  std::optional<long long> offending_degree;
  HilbertSeq top_series;    // order n+1
  HilbertSeq milnor;
};

// the top-order quotient agrees with the Jacobian quotient, except for a
// one-dimensional drop in the socle degree when f is smooth
PropAVerdict verify_prop_A(const Polynomial& f, int m_max = 0);

struct ReconcileRow {
  int k = 0;
  long long global_stable = 0;
  long long local_sum = 0;
  bool ok = false;
};

struct ReconcileReport {
  std::vector<ReconcileRow> rows;
  bool ok = false;
};

// stable values of the global quotients against multiplicity-weighted sums of
// the local invariants of the listed germs
ReconcileReport reconcile_global_local(const Polynomial& f,
                                       const std::vector<std::pair<Polynomial, long long>>& germs,
                                       int m_max = 0);

} // namespace hessalg

#endif
