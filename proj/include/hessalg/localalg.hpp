#ifndef HESSALG_LOCALALG_HPP
#define HESSALG_LOCALALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "hessalg/polynomial.hpp"

namespace hessalg {

// colength of the ideal inside the quotient by all monomials of degree >= N
long long jet_colength(const std::vector<Polynomial>& gens, int N);

// colength of an ideal of finite colength, certified by two consecutive
// agreeing jet truncations; NotArtinianUpToBound when no agreement shows up
// for N < N_max
long long local_colength(const std::vector<Polynomial>& gens, int N_max);

// default truncation bound used when a caller passes 0
int default_jet_bound(const Polynomial& germ);

struct LocalInvariants {
  int n = 0;
  std::vector<long long> chi; // chi[k-1] holds the order-k invariant, k = 1..n+1
  long long tau = 0;
  std::optional<long long> mu;
  bool smooth = false;
};

// the full ladder of corank-filtered colengths of a germ with isolated
// singularity at the origin; a germ with a unit-containing Tjurina ideal is
// reported as smooth with all invariants zero
LocalInvariants chi_invariants(const Polynomial& germ, int N_max = 0, bool with_mu = false);

long long milnor_number(const Polynomial& germ, int N_max = 0);

// true exactly when the next-to-top invariant drops one below the top one
bool is_weighted_homogeneous(const Polynomial& germ, int N_max = 0);

// unit * (germ composed with phi); checks that unit is invertible at the
// origin and that phi fixes the origin with invertible linear part
Polynomial right_left_transform(const Polynomial& germ, const Polynomial& unit,
                                const std::vector<Polynomial>& phi);

struct AdeGerm {
  std::string name;
  int n = 0;
  std::string source;          // in variables y1..y{n}
  std::vector<long long> chi;  // chi[k-1] = order-k invariant
  long long mu = 0;
};

// normal forms of the simple plane and surface germs used by tests and the cli
const std::vector<AdeGerm>& ade_catalog();
const AdeGerm* ade_lookup(const std::string& name);

} // namespace hessalg

#endif
