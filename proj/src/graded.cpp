#include "hessalg/graded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hessalg/error.hpp"
#include "hessalg/exact_rank.hpp"

namespace hessalg {

long long HilbertSeq::value_at(long long m) const {
  if (m < 0) return 0;
  if (m < static_cast<long long>(coeffs.size())) return coeffs[static_cast<size_t>(m)];
  if (tail && m >= tail->stable_from) return tail->stable_value;
  fail(Errc::insufficient_range,
       "degree " + std::to_string(m) + " is past the computed range and no stable tail is certified");
}

std::vector<long long> HilbertSeq::extended(size_t len) const {
  std::vector<long long> out;
  out.reserve(len);
  for (size_t m = 0; m < len; ++m) out.push_back(value_at(static_cast<long long>(m)));
  return out;
}

std::optional<StableTail> detect_stable_tail(const std::vector<long long>& seq,
                                             size_t certified_from) {
  if (certified_from >= seq.size())
    throw std::invalid_argument("certified_from must point inside the sequence");
  const long long value = seq.back();
  for (size_t m = certified_from; m < seq.size(); ++m)
    if (seq[m] != value) return std::nullopt;
  size_t from = certified_from;
  while (from > 0 && seq[from - 1] == value) --from;
  return StableTail{static_cast<long long>(from), value};
}

GradedIdeal GradedIdeal::of(int nvars, std::vector<Polynomial> gens) {
  GradedIdeal ideal;
  ideal.nvars = nvars;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.vars() != nvars)
      fail(Errc::variable_count_mismatch, "generator lives in a different polynomial ring");
    if (!g.is_homogeneous())
      fail(Errc::not_homogeneous, "ideal generators must be homogeneous");
    ideal.generators.push_back(std::move(g));
  }
  return ideal;
}

std::vector<Monomial> monomial_basis(int nvars, int m) {
  std::vector<Monomial> out;
  if (nvars <= 0 || m < 0) return out;
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  // depth-first over exponent vectors, then one sort into grevlex order
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      exps[static_cast<size_t>(pos)] = left;
      out.emplace_back(exps);
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

long long graded_dim(int nvars, int m) {
  if (nvars <= 0 || m < 0) return 0;
  long long num = 1, den = 1;
  for (int i = 1; i < nvars; ++i) {
    num *= m + i;
    den *= i;
  }
  return num / den;
}

namespace {

std::map<Monomial, int, GrevlexDesc> basis_index(const std::vector<Monomial>& basis) {
  std::map<Monomial, int, GrevlexDesc> idx;
  int pos = 0;
  for (const auto& mon : basis) idx.emplace(mon, pos++);
  return idx;
}

std::vector<std::pair<int, Rational>> row_of_multiple(
    const Polynomial& g, const Monomial& alpha,
    const std::map<Monomial, int, GrevlexDesc>& target_idx) {
  std::vector<std::pair<int, Rational>> entries;
  entries.reserve(g.terms().size());
  for (const auto& [mon, coeff] : g.terms())
    entries.emplace_back(target_idx.at(alpha.times(mon)), coeff);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return entries;
}

} // namespace

long long ideal_piece_dim(const GradedIdeal& ideal, int m) {
  if (m < 0) return 0;
  const auto target = monomial_basis(ideal.nvars, m);
  const auto target_idx = basis_index(target);
  std::vector<SparseRow> rows;
  for (const auto& g : ideal.generators) {
    const int e = g.degree();
    if (e > m) continue;
    for (const auto& alpha : monomial_basis(ideal.nvars, m - e))
      rows.push_back(make_integer_row(row_of_multiple(g, alpha, target_idx)));
  }
  return exact_rank(std::move(rows));
}

long long quotient_piece_dim(const GradedIdeal& ideal, int m) {
  return graded_dim(ideal.nvars, m) - ideal_piece_dim(ideal, m);
}

HilbertSeq quotient_hilbert(const GradedIdeal& ideal, int m_max,
                            std::optional<long long> certified_from) {
  HilbertSeq seq;
  for (int m = 0; m <= m_max; ++m) seq.coeffs.push_back(quotient_piece_dim(ideal, m));
  if (certified_from && *certified_from >= 0 && *certified_from <= m_max)
    seq.tail = detect_stable_tail(seq.coeffs, static_cast<size_t>(*certified_from));
  return seq;
}

long long essential_syzygy_dim(const Polynomial& f, int q) {
  if (f.is_zero()) fail(Errc::degree_too_low, "the zero polynomial has no syzygy module");
  if (!f.is_homogeneous()) fail(Errc::not_homogeneous, "syzygy dimensions need a homogeneous form");
  if (q < 0) return 0;
  const int d = f.degree();
  const int v = f.vars();
  const auto partials = jacobian_generators(f);

  const auto domain = monomial_basis(v, q);
  const long long domain_dim = static_cast<long long>(domain.size());
  const auto target_idx = basis_index(monomial_basis(v, q + d - 1));

  std::vector<SparseRow> image_rows;
  for (const auto& g : partials) {
    if (g.is_zero()) continue;
    for (const auto& alpha : domain)
      image_rows.push_back(make_integer_row(row_of_multiple(g, alpha, target_idx)));
  }
  const long long image_rank = exact_rank(std::move(image_rows));
  const long long kernel_dim = static_cast<long long>(v) * domain_dim - image_rank;

  long long koszul_rank = 0;
  if (q >= d - 1) {
    const auto domain_idx = basis_index(domain);
    std::vector<SparseRow> koszul_rows;
    for (int i = 0; i < v; ++i) {
      for (int j = i + 1; j < v; ++j) {
        for (const auto& alpha : monomial_basis(v, q - (d - 1))) {
          std::vector<std::pair<int, Rational>> entries;
          for (const auto& [mon, coeff] : partials[static_cast<size_t>(j)].terms())
            entries.emplace_back(i * domain_dim + domain_idx.at(alpha.times(mon)), coeff);
          for (const auto& [mon, coeff] : partials[static_cast<size_t>(i)].terms())
            entries.emplace_back(j * domain_dim + domain_idx.at(alpha.times(mon)), -coeff);
          if (entries.empty()) continue;
          std::sort(entries.begin(), entries.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          koszul_rows.push_back(make_integer_row(entries));
        }
      }
    }
    koszul_rank = exact_rank(std::move(koszul_rows));
  }
  return kernel_dim - koszul_rank;
}

std::optional<int> mdr(const Polynomial& f, int q_max) {
  for (int q = 0; q <= q_max; ++q)
    if (essential_syzygy_dim(f, q) > 0) return q;
  return std::nullopt;
}

} // namespace hessalg
