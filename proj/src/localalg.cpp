#include "hessalg/localalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hessalg/error.hpp"
#include "hessalg/exact_rank.hpp"
#include "hessalg/graded.hpp"
#include "hessalg/polytext.hpp"

namespace hessalg {

namespace {

// monomials of degree < N, with a position map
struct JetBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, int, GrevlexDesc> index;
};

JetBasis jet_basis(int nvars, int N) {
  JetBasis basis;
  for (int m = 0; m < N; ++m)
    for (auto& mon : monomial_basis(nvars, m)) basis.monomials.push_back(std::move(mon));
  int pos = 0;
  for (const auto& mon : basis.monomials) basis.index.emplace(mon, pos++);
  return basis;
}

int lowest_degree(const Polynomial& g) {
  int low = -1;
  for (const auto& [mon, coeff] : g.terms()) {
    (void)coeff;
    if (low < 0 || mon.degree() < low) low = mon.degree();
  }
  return low;
}

} // namespace

long long jet_colength(const std::vector<Polynomial>& gens, int N) {
  if (N <= 0) return 0;
  int nvars = 0;
  for (const auto& g : gens)
    if (!g.is_zero()) nvars = g.vars();
  if (nvars == 0) fail(Errc::bad_config, "jet colength needs at least one nonzero generator");
  for (const auto& g : gens)
    if (!g.is_zero() && g.vars() != nvars)
      fail(Errc::variable_count_mismatch, "generators live in different local rings");

  const JetBasis basis = jet_basis(nvars, N);
  std::vector<SparseRow> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int low = lowest_degree(g);
    for (int a = 0; a + low < N; ++a) {
      for (const auto& alpha : monomial_basis(nvars, a)) {
        std::vector<std::pair<int, Rational>> entries;
        for (const auto& [mon, coeff] : g.terms()) {
          if (a + mon.degree() >= N) continue;
          entries.emplace_back(basis.index.at(alpha.times(mon)), coeff);
        }
        if (entries.empty()) continue;
        std::sort(entries.begin(), entries.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(make_integer_row(entries));
      }
    }
  }
  return static_cast<long long>(basis.monomials.size()) - exact_rank(std::move(rows));
}

long long local_colength(const std::vector<Polynomial>& gens, int N_max) {
  long long prev = jet_colength(gens, 1);
  for (int N = 2; N <= N_max; ++N) {
    const long long cur = jet_colength(gens, N);
    if (cur == prev) return cur;
    prev = cur;
  }
  fail(Errc::not_artinian_up_to_bound,
       "colength did not stabilize for truncation orders below " + std::to_string(N_max));
}

int default_jet_bound(const Polynomial& germ) {
  const int n = germ.vars();
  const int d = std::max(germ.degree(), 2);
  long long bound = 4;
  for (int i = 0; i < n; ++i) {
    bound *= d - 1;
    if (bound > 120) return 120;
  }
  return static_cast<int>(std::max<long long>(bound, 8));
}

namespace {

std::vector<Polynomial> germ_partials(const Polynomial& germ) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(germ.vars()));
  for (int i = 0; i < germ.vars(); ++i) out.push_back(germ.derivative(i));
  return out;
}

} // namespace

LocalInvariants chi_invariants(const Polynomial& germ, int N_max, bool with_mu) {
  if (germ.is_zero()) fail(Errc::bad_config, "the zero germ has no isolated singularity");
  if (germ.constant_term() != 0)
    fail(Errc::bad_config, "the germ must vanish at the origin");
  if (N_max <= 0) N_max = default_jet_bound(germ);

  const int n = germ.vars();
  LocalInvariants inv;
  inv.n = n;
  inv.chi.assign(static_cast<size_t>(n) + 1, 0);

  std::vector<Polynomial> tjurina = germ_partials(germ);
  tjurina.push_back(germ);
  inv.tau = local_colength(tjurina, N_max);
  if (inv.tau == 0) {
    inv.smooth = true;
    if (with_mu) inv.mu = 0;
    return inv;
  }

  inv.chi[static_cast<size_t>(n)] = inv.tau;
  const PolyMatrix hess = second_partials(germ);
  for (int k = 1; k <= n; ++k) {
    std::vector<Polynomial> gens = tjurina;
    for (auto& minor : k_minors(hess, k)) gens.push_back(std::move(minor));
    inv.chi[static_cast<size_t>(k) - 1] = local_colength(gens, N_max);
  }
  if (with_mu) inv.mu = local_colength(germ_partials(germ), N_max);
  return inv;
}

long long milnor_number(const Polynomial& germ, int N_max) {
  if (germ.is_zero()) fail(Errc::bad_config, "the zero germ has no isolated singularity");
  if (N_max <= 0) N_max = default_jet_bound(germ);
  return local_colength(germ_partials(germ), N_max);
}

bool is_weighted_homogeneous(const Polynomial& germ, int N_max) {
  const LocalInvariants inv = chi_invariants(germ, N_max);
  if (inv.smooth) return false;
  return inv.chi[static_cast<size_t>(inv.n) - 1] == inv.tau - 1;
}

namespace {

bool linear_part_invertible(const std::vector<Polynomial>& phi) {
  const int n = static_cast<int>(phi.size());
  std::vector<std::vector<Rational>> mat(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> exps(static_cast<size_t>(n), 0);
      exps[static_cast<size_t>(j)] = 1;
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          phi[static_cast<size_t>(i)].coefficient(Monomial(exps));
    }
  }
  // fraction-free elimination, only the rank matters
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(mat[static_cast<size_t>(pivot)], mat[static_cast<size_t>(rank)]);
    for (int r = rank + 1; r < n; ++r) {
      const Rational factor = mat[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                              mat[static_cast<size_t>(rank)][static_cast<size_t>(col)];
      for (int c = col; c < n; ++c)
        mat[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            factor * mat[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    }
    ++rank;
  }
  return rank == n;
}

} // namespace

Polynomial right_left_transform(const Polynomial& germ, const Polynomial& unit,
                                const std::vector<Polynomial>& phi) {
  const int n = germ.vars();
  if (unit.vars() != n)
    fail(Errc::variable_count_mismatch, "the unit lives in a different local ring");
  if (static_cast<int>(phi.size()) != n)
    fail(Errc::arity_mismatch, "the coordinate change needs one component per variable");
  for (const auto& comp : phi)
    if (comp.vars() != n)
      fail(Errc::variable_count_mismatch, "a coordinate component lives in a different local ring");
  if (unit.constant_term() == 0)
    fail(Errc::not_a_unit, "the unit factor vanishes at the origin");
  for (const auto& comp : phi)
    if (comp.constant_term() != 0)
      fail(Errc::not_a_local_isomorphism, "the coordinate change must fix the origin");
  if (!linear_part_invertible(phi))
    fail(Errc::not_a_local_isomorphism, "the linear part of the coordinate change is singular");
  return unit * germ.substitute(phi);
}

namespace {

std::vector<AdeGerm> build_ade_catalog() {
  struct Row {
    const char* name;
    int n;
    const char* source;
    std::vector<long long> chi;
    long long mu;
  };
  const std::vector<Row> rows = {
      {"A1", 2, "y1^2 + y2^2", {0, 0, 1}, 1},
      {"A2", 2, "y1^2 + y2^3", {0, 1, 2}, 2},
      {"A3", 2, "y1^2 + y2^4", {0, 2, 3}, 3},
      {"A4", 2, "y1^2 + y2^5", {0, 3, 4}, 4},
      {"A5", 2, "y1^2 + y2^6", {0, 4, 5}, 5},
      {"D4", 2, "y1^2*y2 + y2^3", {1, 3, 4}, 4},
      {"D5", 2, "y1^2*y2 + y2^4", {1, 4, 5}, 5},
      {"E6", 2, "y1^3 + y2^4", {2, 5, 6}, 6},
      {"E7", 2, "y1^3 + y1*y2^3", {2, 6, 7}, 7},
      {"E8", 2, "y1^3 + y2^5", {3, 7, 8}, 8},
      {"A1_3", 3, "y1^2 + y2^2 + y3^2", {0, 0, 0, 1}, 1},
  };
  std::vector<AdeGerm> catalog;
  catalog.reserve(rows.size());
  for (const auto& row : rows)
    catalog.push_back(AdeGerm{row.name, row.n, row.source, row.chi, row.mu});
  return catalog;
}

} // namespace

const std::vector<AdeGerm>& ade_catalog() {
  static const std::vector<AdeGerm> catalog = build_ade_catalog();
  return catalog;
}

const AdeGerm* ade_lookup(const std::string& name) {
  for (const auto& entry : ade_catalog())
    if (entry.name == name) return &entry;
  return nullptr;
}

} // namespace hessalg
