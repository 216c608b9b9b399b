#ifndef HESSALG_TEST_HELPERS_HPP
#define HESSALG_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hessalg/error.hpp"
#include "hessalg/polynomial.hpp"
#include "hessalg/polytext.hpp"

namespace testutil {

struct Caught {
  bool threw = false;
  hessalg::Errc code{};
  long position = -1;
  std::string message;
};

template <typename F>
Caught capture(F&& fn) {
  Caught caught;
  try {
    std::forward<F>(fn)();
  } catch (const hessalg::Error& e) {
    caught.threw = true;
    caught.code = e.code();
    caught.position = e.position();
    caught.message = e.what();
  }
  return caught;
}

inline hessalg::Polynomial parse3(const std::string& source) {
  return hessalg::parse_polynomial(hessalg::PolyText{source, {"x", "y", "z"}, {}});
}

inline hessalg::Polynomial germ2(const std::string& source) {
  return hessalg::parse_polynomial(hessalg::PolyText{source, {"y1", "y2"}, {}});
}

inline hessalg::Rational rand_rational(std::mt19937_64& rng) {
  long num = 0;
  while (num == 0) num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 3) + 1;
  return hessalg::Rational(hessalg::BigInt(num)) / hessalg::Rational(hessalg::BigInt(den));
}

inline hessalg::Monomial rand_monomial(std::mt19937_64& rng, int nvars, int deg) {
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  for (int i = 0; i < deg; ++i) exps[rng() % static_cast<size_t>(nvars)] += 1;
  return hessalg::Monomial(exps);
}

// nonzero homogeneous form of degree d
inline hessalg::Polynomial rand_form(std::mt19937_64& rng, int nvars, int d, int terms) {
  hessalg::Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) p.add_term(rand_monomial(rng, nvars, d), rand_rational(rng));
  if (p.is_zero()) {
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    exps[0] = d;
    p.add_term(hessalg::Monomial(exps), 1);
  }
  return p;
}

// nonzero polynomial with terms of mixed degrees up to max_deg
inline hessalg::Polynomial rand_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
  hessalg::Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    const int deg = static_cast<int>(rng() % static_cast<size_t>(max_deg + 1));
    p.add_term(rand_monomial(rng, nvars, deg), rand_rational(rng));
  }
  if (p.is_zero()) p.add_term(hessalg::Monomial(nvars), 1);
  return p;
}

inline hessalg::Rational eval(const hessalg::Polynomial& p,
                              const std::vector<hessalg::Rational>& point) {
  hessalg::Rational total = 0;
  for (const auto& [mon, coeff] : p.terms()) {
    hessalg::Rational term = coeff;
    for (int i = 0; i < p.vars(); ++i)
      for (int e = 0; e < mon.exponent(i); ++e) term *= point[static_cast<size_t>(i)];
    total += term;
  }
  return total;
}

inline std::vector<hessalg::Rational> rand_point(std::mt19937_64& rng, int nvars) {
  std::vector<hessalg::Rational> point;
  for (int i = 0; i < nvars; ++i) point.push_back(rand_rational(rng));
  return point;
}

} // namespace testutil

#endif
