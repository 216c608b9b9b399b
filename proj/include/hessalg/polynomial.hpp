#ifndef HESSALG_POLYNOMIAL_HPP
#define HESSALG_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessalg/error.hpp"

namespace hessalg {

using Rational = mpq_class;
using BigInt = mpz_class;

// Exponent vector with cached total degree. Length is fixed at construction
// and must match the ambient ring everywhere a monomial is used.
class Monomial {
public:
  explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0), degree_(0) {}
  explicit Monomial(std::vector<int> exps);

  int vars() const { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }

  Monomial times(const Monomial& o) const;
  // divides + quotient in one step; nullopt when some exponent would go negative
  std::optional<Monomial> divided_by(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
  std::vector<int> exps_;
  int degree_;
};

// >0 when a is grevlex-larger than b, <0 when smaller, 0 when equal.
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrevlexDesc>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial term(Monomial m, const Rational& c);

  int vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  const Monomial& leading_monomial() const;  // largest in grevlex; poly must be nonzero

  // total degree; -1 for the zero polynomial
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(int i) const;  // IndexOutOfRange

  // keep terms of total degree < bound (jet truncation)
  Polynomial truncated_below(int bound) const;

  // simultaneous ring-homomorphism substitution; images.size() must equal
  // vars() and all images must live in one common ring (ArityMismatch)
  Polynomial substitute(const std::vector<Polynomial>& images) const;

private:
  int nvars_;
  TermMap terms_;
};

// total order on polynomials (var count, then term-by-term); used only to
// canonicalize generator lists, no algebraic meaning
bool poly_less(const Polynomial& a, const Polynomial& b);

class PolyMatrix {
public:
  PolyMatrix(int rows, int cols, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int vars() const { return nvars_; }
  const Polynomial& at(int i, int j) const;
  Polynomial& at(int i, int j);

private:
  int rows_, cols_, nvars_;
  std::vector<Polynomial> entries_;
};

// (f_0, ..., f_n); f must be homogeneous (NotHomogeneous)
std::vector<Polynomial> jacobian_generators(const Polynomial& f);

// symmetric matrix of second partials; f homogeneous of degree >= 2
// (NotHomogeneous, DegreeTooLow)
PolyMatrix hessian_matrix(const Polynomial& f);

// same matrix without the homogeneity contract, for local germs
PolyMatrix second_partials(const Polynomial& p);

// exact determinant by cofactor expansion (memoized over column subsets);
// NotSquare
Polynomial determinant(const PolyMatrix& m);

// all k x k minors, deduplicated up to sign, zeros dropped; subsets are
// enumerated in lexicographic order and the first representative of each
// sign class is kept. NotSquare; KOutOfRange.
std::vector<Polynomial> k_minors(const PolyMatrix& m, int k);

using RatMatrix = std::vector<std::vector<Rational>>;

// applies the linear change of coordinates (when given), then sets the chart
// variable to 1; result lives in vars()-1 variables. The change matrix acts
// on the variable vector, so the germ describes the point that the change
// maps to the chart's unit point. NotHomogeneous; IndexOutOfRange;
// SingularChangeMatrix.
Polynomial dehomogenize(const Polynomial& f, int chart,
                        const std::optional<RatMatrix>& change = std::nullopt);

} // namespace hessalg

#endif
