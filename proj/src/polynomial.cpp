#include "hessalg/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace hessalg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_identifier: return "UnknownIdentifier";
    case Errc::negative_exponent: return "NegativeExponent";
    case Errc::variable_count_mismatch: return "VariableCountMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::degree_too_low: return "DegreeTooLow";
    case Errc::not_square: return "NotSquare";
    case Errc::k_out_of_range: return "KOutOfRange";
    case Errc::singular_change_matrix: return "SingularChangeMatrix";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::not_artinian_up_to_bound: return "NotArtinianUpToBound";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_a_local_isomorphism: return "NotALocalIsomorphism";
    case Errc::mixed_degrees: return "MixedDegrees";
    case Errc::insufficient_range: return "InsufficientRange";
    case Errc::stabilization_not_certified: return "StabilizationNotCertified";
    case Errc::compare_k_missing: return "CompareKMissing";
    case Errc::corrupt_fixture: return "CorruptFixture";
    case Errc::bad_config: return "BadConfig";
  }
  return "UnknownError";
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)), degree_(0) {
  for (int e : exps_) degree_ += e;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<int> e(exps_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  std::vector<int> e(exps_);
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] -= o.exps_[i];
    if (e[i] < 0) return std::nullopt;
  }
  return Monomial(std::move(e));
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars)
    fail(Errc::index_out_of_range, "variable index " + std::to_string(i) +
                                       " out of range for " + std::to_string(nvars) +
                                       " variables");
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  Polynomial p(nvars);
  p.add_term(Monomial(std::move(e)), 1);
  return p;
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p(m.vars());
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

const Monomial& Polynomial::leading_monomial() const { return terms_.begin()->first; }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

static void require_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars())
    fail(Errc::variable_count_mismatch,
         "operands have " + std::to_string(a.vars()) + " and " +
             std::to_string(b.vars()) + " variables");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_vars(*this, o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_vars(*this, o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_vars(*this, o);
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= nvars_)
    fail(Errc::index_out_of_range,
         "derivative index " + std::to_string(i) + " out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(i);
    if (e == 0) continue;
    std::vector<int> ex(m.exponents());
    ex[static_cast<size_t>(i)] = e - 1;
    r.add_term(Monomial(std::move(ex)), c * e);
  }
  return r;
}

Polynomial Polynomial::truncated_below(int bound) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() < bound) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    fail(Errc::arity_mismatch, "expected " + std::to_string(nvars_) +
                                   " images, got " + std::to_string(images.size()));
  int target = images.empty() ? nvars_ : images[0].vars();
  for (const auto& im : images)
    if (im.vars() != target)
      fail(Errc::arity_mismatch, "images live in different rings");

  // cache powers of each image as needed
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[i]);
    return cache[static_cast<size_t>(e)];
  };

  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial prod = Polynomial::constant(target, c);
    for (size_t i = 0; i < images.size(); ++i) {
      int e = m.exponent(static_cast<int>(i));
      if (e > 0) prod = prod * power(i, e);
    }
    r = r + prod;
  }
  return r;
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) return a.vars() < b.vars();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    int c = grevlex_cmp(ia->first, ib->first);
    if (c != 0) return c > 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols),
               Polynomial(nvars)) {}

const Polynomial& PolyMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    fail(Errc::index_out_of_range, "matrix entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") out of range");
  return entries_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
                  static_cast<size_t>(j)];
}

Polynomial& PolyMatrix::at(int i, int j) {
  return const_cast<Polynomial&>(static_cast<const PolyMatrix&>(*this).at(i, j));
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  if (!f.is_homogeneous())
    fail(Errc::not_homogeneous, "Jacobian generators need a homogeneous input");
  std::vector<Polynomial> gens;
  gens.reserve(static_cast<size_t>(f.vars()));
  for (int i = 0; i < f.vars(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

PolyMatrix second_partials(const Polynomial& p) {
  int v = p.vars();
  PolyMatrix h(v, v, v);
  for (int i = 0; i < v; ++i) {
    Polynomial pi = p.derivative(i);
    for (int j = i; j < v; ++j) {
      Polynomial pij = pi.derivative(j);
      h.at(i, j) = pij;
      if (j != i) h.at(j, i) = pij;
    }
  }
  return h;
}

PolyMatrix hessian_matrix(const Polynomial& f) {
  if (!f.is_homogeneous())
    fail(Errc::not_homogeneous, "Hessian needs a homogeneous input");
  if (f.degree() < 2)
    fail(Errc::degree_too_low,
         "Hessian needs degree >= 2, got " + std::to_string(f.degree()));
  return second_partials(f);
}

namespace {

// Laplace expansion along the first remaining row, memoized on the set of
// still-available columns (the row is determined by how many columns are gone)
class MinorEvaluator {
public:
  MinorEvaluator(const PolyMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols)
      : m_(m), rows_(rows), cols_(cols) {}

  Polynomial det() {
    uint32_t full = (cols_.size() >= 32) ? ~0u : ((1u << cols_.size()) - 1);
    return eval(0, full);
  }

private:
  Polynomial eval(size_t row, uint32_t avail) {
    if (row == rows_.size()) return Polynomial::constant(m_.vars(), 1);
    auto it = memo_.find(avail);
    if (it != memo_.end()) return it->second;
    Polynomial acc(m_.vars());
    int sign = 1;
    for (size_t j = 0; j < cols_.size(); ++j) {
      if (!(avail & (1u << j))) continue;
      const Polynomial& entry = m_.at(rows_[row], cols_[j]);
      if (!entry.is_zero()) {
        Polynomial sub = eval(row + 1, avail & ~(1u << j));
        Polynomial contrib = entry * sub;
        acc = (sign > 0) ? acc + contrib : acc - contrib;
      }
      sign = -sign;
    }
    memo_.emplace(avail, acc);
    return acc;
  }

  const PolyMatrix& m_;
  const std::vector<int>& rows_;
  const std::vector<int>& cols_;
  std::unordered_map<uint32_t, Polynomial> memo_;
};

// sign-canonical form: flip so the grevlex-leading coefficient is positive
Polynomial sign_canonical(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.terms().begin()->second < 0) return -p;
  return p;
}

void next_subset(std::vector<int>& idx, int n, bool& done) {
  int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++idx[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
}

} // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    fail(Errc::not_square, "determinant of a " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + " matrix");
  std::vector<int> idx(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) idx[static_cast<size_t>(i)] = i;
  return MinorEvaluator(m, idx, idx).det();
}

std::vector<Polynomial> k_minors(const PolyMatrix& m, int k) {
  if (m.rows() != m.cols())
    fail(Errc::not_square, "minors of a " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + " matrix");
  int s = m.rows();
  if (k < 1 || k > s)
    fail(Errc::k_out_of_range,
         "k=" + std::to_string(k) + " outside [1, " + std::to_string(s) + "]");

  std::vector<Polynomial> out;
  std::vector<int> rows(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i;
  bool rows_done = false;
  while (!rows_done) {
    std::vector<int> cols(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cols[static_cast<size_t>(i)] = i;
    bool cols_done = false;
    while (!cols_done) {
      Polynomial d = sign_canonical(MinorEvaluator(m, rows, cols).det());
      if (!d.is_zero()) {
        bool seen = false;
        for (const auto& prev : out)
          if (prev == d) {
            seen = true;
            break;
          }
        if (!seen) out.push_back(d);
      }
      next_subset(cols, s, cols_done);
    }
    next_subset(rows, s, rows_done);
  }
  return out;
}

namespace {

std::optional<RatMatrix> rat_inverse(RatMatrix a) {
  size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
    }
    Rational pivot = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] /= pivot;
      inv[c][j] /= pivot;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational factor = a[i][c];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[c][j];
        inv[i][j] -= factor * inv[c][j];
      }
    }
  }
  return inv;
}

} // namespace

Polynomial dehomogenize(const Polynomial& f, int chart,
                        const std::optional<RatMatrix>& change) {
  if (!f.is_homogeneous())
    fail(Errc::not_homogeneous, "dehomogenization needs a homogeneous input");
  int v = f.vars();
  if (chart < 0 || chart >= v)
    fail(Errc::index_out_of_range, "chart index " + std::to_string(chart));
  Polynomial g = f;
  if (change) {
    const RatMatrix& a = *change;
    if (static_cast<int>(a.size()) != v)
      fail(Errc::singular_change_matrix, "change matrix must be " +
                                             std::to_string(v) + "x" +
                                             std::to_string(v));
    for (const auto& row : a)
      if (static_cast<int>(row.size()) != v)
        fail(Errc::singular_change_matrix, "change matrix is ragged");
    // the matrix transforms coordinates; rewriting f in the new coordinates
    // substitutes the inverse, so the germ sits at the point the change
    // carries onto the chart's unit point
    auto inv = rat_inverse(a);
    if (!inv)
      fail(Errc::singular_change_matrix, "change matrix is singular");
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) {
      Polynomial im(v);
      for (int j = 0; j < v; ++j)
        im = im + Polynomial::variable(v, j).scaled(
                      (*inv)[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      images.push_back(im);
    }
    g = f.substitute(images);
  }
  // send the chart variable to 1 and renumber the rest
  std::vector<Polynomial> images;
  images.reserve(static_cast<size_t>(v));
  int local = 0;
  for (int i = 0; i < v; ++i) {
    if (i == chart)
      images.push_back(Polynomial::constant(v - 1, 1));
    else
      images.push_back(Polynomial::variable(v - 1, local++));
  }
  return g.substitute(images);
}

} // namespace hessalg
