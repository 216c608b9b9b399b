#ifndef HESSALG_GRADED_HPP
#define HESSALG_GRADED_HPP

#include <optional>
#include <vector>

#include "hessalg/polynomial.hpp"

namespace hessalg {

struct StableTail {
  long long stable_from = 0;
  long long stable_value = 0;
  bool operator==(const StableTail&) const = default;
};

// Hilbert function values by degree, with an optional certified constant tail.
struct HilbertSeq {
  std::vector<long long> coeffs;
  std::optional<StableTail> tail;

  // value in degree m; InsufficientRange when m is past the computed range
  // and no certified tail covers it
  long long value_at(long long m) const;

  // first len values, padding from the tail past the computed range
  std::vector<long long> extended(size_t len) const;

  bool operator==(const HilbertSeq&) const = default;
};

// smallest index from which seq is constant, provided seq is constant from
// certified_from (the caller's theoretical bound) to the end; absent otherwise
std::optional<StableTail> detect_stable_tail(const std::vector<long long>& seq,
                                             size_t certified_from);

// homogeneous generators; zero generators are dropped on construction
struct GradedIdeal {
  int nvars = 0;
  std::vector<Polynomial> generators;

  static GradedIdeal of(int nvars, std::vector<Polynomial> gens);
};

// all monomials of total degree m, grevlex-descending
std::vector<Monomial> monomial_basis(int nvars, int m);

// dim S_m = C(m + v - 1, v - 1)
long long graded_dim(int nvars, int m);

// rank of the degree-m piece of the ideal, by exact elimination
long long ideal_piece_dim(const GradedIdeal& ideal, int m);

long long quotient_piece_dim(const GradedIdeal& ideal, int m);

// coeffs[m] = dim (S/I)_m for 0 <= m <= m_max; the tail is set when the
// caller certifies a theoretical stabilization bound within range
HilbertSeq quotient_hilbert(const GradedIdeal& ideal, int m_max,
                            std::optional<long long> certified_from = std::nullopt);

// dim of degree-q syzygies of the partial derivatives minus the dim of the
// Koszul subspace they always contain
long long essential_syzygy_dim(const Polynomial& f, int q);

// smallest q <= q_max with an essential syzygy; absent when none shows up
std::optional<int> mdr(const Polynomial& f, int q_max);

} // namespace hessalg

#endif
