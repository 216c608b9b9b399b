#include "hessalg/hessian.hpp"

#include <algorithm>

#include "hessalg/error.hpp"

namespace hessalg {

namespace {

void require_form(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous())
    fail(Errc::not_homogeneous, "a nonzero homogeneous form is required");
  if (f.degree() < 2)
    fail(Errc::degree_too_low, "the form must have degree at least 2");
}

GradedIdeal hessian_ideal(const Polynomial& f, int k) {
  std::vector<Polynomial> gens = jacobian_generators(f);
  if (k <= f.vars()) {
    for (auto& minor : k_minors(hessian_matrix(f), k)) gens.push_back(std::move(minor));
  }
  return GradedIdeal::of(f.vars(), std::move(gens));
}

} // namespace

long long stabilization_bound(int n, int d, int k) {
  return static_cast<long long>(n + k + 1) * (d - 2);
}

HilbertSeq smooth_reference_series(int n, int d, int m_max) {
  if (n < 1) fail(Errc::bad_config, "the dimension must be at least 1");
  if (d < 2) fail(Errc::degree_too_low, "the degree must be at least 2");
  const long long T = static_cast<long long>(n + 1) * (d - 2);
  if (m_max <= 0) m_max = static_cast<int>(T) + 1;

  // coefficients of (1 + t + ... + t^(d-2))^(n+1), truncated at m_max
  std::vector<long long> coeffs(static_cast<size_t>(m_max) + 1, 0);
  coeffs[0] = 1;
  for (int factor = 0; factor < n + 1; ++factor) {
    std::vector<long long> next(coeffs.size(), 0);
    for (size_t m = 0; m < coeffs.size(); ++m) {
      if (coeffs[m] == 0) continue;
      for (int j = 0; j <= d - 2 && m + static_cast<size_t>(j) < next.size(); ++j)
        next[m + static_cast<size_t>(j)] += coeffs[m];
    }
    coeffs = std::move(next);
  }
  HilbertSeq seq;
  seq.coeffs = std::move(coeffs);
  seq.tail = StableTail{T + 1, 0};
  return seq;
}

HilbertSeq milnor_series(const Polynomial& f, int m_max) {
  require_form(f);
  const int n = f.vars() - 1;
  const int d = f.degree();
  const long long T = static_cast<long long>(n + 1) * (d - 2);
  if (m_max <= 0) m_max = static_cast<int>(T) + 1;
  const GradedIdeal jac = GradedIdeal::of(f.vars(), jacobian_generators(f));
  std::optional<long long> certified;
  if (m_max >= T + 1) certified = T + 1;
  return quotient_hilbert(jac, m_max, certified);
}

HilbertSeq hessian_algebra_series(const Polynomial& f, int k, int m_max) {
  require_form(f);
  const int n = f.vars() - 1;
  if (k < 1 || k > n + 1)
    fail(Errc::k_out_of_range, "the order must lie between 1 and " + std::to_string(n + 1));
  const long long bound = stabilization_bound(n, f.degree(), k);
  if (m_max <= 0) m_max = static_cast<int>(bound) + 1;
  std::optional<long long> certified;
  if (m_max >= bound) certified = bound;
  return quotient_hilbert(hessian_ideal(f, k), m_max, certified);
}

Thresholds thresholds(const Polynomial& f, int m_max) {
  require_form(f);
  Thresholds out;
  out.n = f.vars() - 1;
  out.d = f.degree();
  out.T = static_cast<long long>(out.n + 1) * (out.d - 2);
  if (m_max <= 0) m_max = static_cast<int>(out.T) + 1;
  if (m_max <= out.T)
    fail(Errc::insufficient_range,
         "threshold extraction needs the range to reach degree " + std::to_string(out.T + 1));

  const HilbertSeq milnor = milnor_series(f, m_max);
  const HilbertSeq reference = smooth_reference_series(out.n, out.d, m_max);
  if (!milnor.tail)
    fail(Errc::stabilization_not_certified,
         "the Jacobian quotient did not settle within the computed range");
  out.tau_total = milnor.tail->stable_value;
  out.st = milnor.tail->stable_from;

  std::optional<long long> first_mismatch;
  for (int m = 0; m <= m_max; ++m) {
    if (milnor.coeffs[static_cast<size_t>(m)] != reference.value_at(m)) {
      first_mismatch = m;
      break;
    }
  }
  for (int k = 1; k <= out.n + 1; ++k)
    out.tilde_T.push_back(stabilization_bound(out.n, out.d, k));

  if (!first_mismatch) {
    out.smooth = true;
    return out;
  }
  out.ct = *first_mismatch - 1;

  const int q_max = static_cast<int>(*out.ct) - out.d + 2;
  out.mdr = mdr(f, q_max);

  std::vector<long long> T_k, hat_T;
  for (int k = 1; k <= out.n + 1; ++k) {
    const long long spacing = static_cast<long long>(k) * (out.d - 2);
    T_k.push_back(std::max(out.T - *out.ct + spacing, *out.st));
    hat_T.push_back(out.T + std::max<long long>(spacing - *out.ct, 0));
  }
  out.T_k = std::move(T_k);
  out.hat_T = std::move(hat_T);
  out.note =
      "hat_T takes the per-order spacing to be d - 2; the d - 1 spacing variant "
      "overstates the certified bounds and is not used";
  return out;
}

CountWh count_weighted_homogeneous(const Polynomial& f, std::optional<long long> m_eval) {
  require_form(f);
  const int n = f.vars() - 1;
  const int d = f.degree();
  const long long T = static_cast<long long>(n + 1) * (d - 2);
  CountWh out;
  out.m_eval = m_eval ? *m_eval : static_cast<long long>(2 * n + 1) * (d - 2);
  if (out.m_eval < 0) fail(Errc::bad_config, "the evaluation degree must be nonnegative");

  const int m_need = static_cast<int>(std::max(out.m_eval, T + 1));
  const HilbertSeq milnor = milnor_series(f, m_need);
  if (!milnor.tail)
    fail(Errc::stabilization_not_certified,
         "the Jacobian quotient did not settle within the computed range");
  out.milnor_dim = milnor.value_at(out.m_eval);
  if (milnor.tail->stable_value == 0) {
    out.smooth = true;
    out.hn_dim = out.milnor_dim;
    return out;
  }
  out.hn_dim = quotient_piece_dim(hessian_ideal(f, n), static_cast<int>(out.m_eval));
  out.count = out.milnor_dim - out.hn_dim;
  return out;
}

PropAVerdict verify_prop_A(const Polynomial& f, int m_max) {
  require_form(f);
  const int n = f.vars() - 1;
  const int d = f.degree();
  const long long T = static_cast<long long>(n + 1) * (d - 2);
  if (m_max <= 0) m_max = static_cast<int>(T) + 1;
  if (m_max <= T)
    fail(Errc::insufficient_range,
         "the comparison needs the range to reach degree " + std::to_string(T + 1));

  PropAVerdict verdict;
  verdict.milnor = milnor_series(f, m_max);
  verdict.top_series = hessian_algebra_series(f, n + 1, m_max);
  const HilbertSeq reference = smooth_reference_series(n, d, m_max);

  bool smooth = true;
  for (int m = 0; m <= m_max; ++m)
    if (verdict.milnor.coeffs[static_cast<size_t>(m)] != reference.value_at(m)) {
      smooth = false;
      break;
    }
  verdict.case_index = smooth ? 1 : 2;

  verdict.ok = true;
  for (int m = 0; m <= m_max; ++m) {
    const long long drop = (smooth && m == T) ? 1 : 0;
    if (verdict.top_series.coeffs[static_cast<size_t>(m)] !=
        verdict.milnor.coeffs[static_cast<size_t>(m)] - drop) {
      verdict.ok = false;
      verdict.offending_degree = m;
      break;
    }
  }
  return verdict;
}

ReconcileReport reconcile_global_local(const Polynomial& f,
                                       const std::vector<std::pair<Polynomial, long long>>& germs,
                                       int m_max) {
  require_form(f);
  const int n = f.vars() - 1;
  for (const auto& [germ, mult] : germs) {
    (void)mult;
    if (germ.vars() != n)
      fail(Errc::arity_mismatch, "each germ must live in a local ring with " +
                                     std::to_string(n) + " variables");
  }
  std::vector<LocalInvariants> local;
  local.reserve(germs.size());
  for (const auto& [germ, mult] : germs) {
    (void)mult;
    local.push_back(chi_invariants(germ));
  }

  ReconcileReport report;
  report.ok = true;
  for (int k = 1; k <= n + 1; ++k) {
    const long long bound = stabilization_bound(n, f.degree(), k);
    const int mk = m_max > 0 ? m_max : static_cast<int>(bound) + 1;
    const HilbertSeq series = hessian_algebra_series(f, k, mk);
    if (!series.tail)
      fail(Errc::stabilization_not_certified,
           "order " + std::to_string(k) + " needs the range to reach degree " +
               std::to_string(bound));
    ReconcileRow row;
    row.k = k;
    row.global_stable = series.tail->stable_value;
    for (size_t i = 0; i < germs.size(); ++i)
      row.local_sum += germs[i].second * local[i].chi[static_cast<size_t>(k) - 1];
    row.ok = row.global_stable == row.local_sum;
    report.ok = report.ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

} // namespace hessalg
