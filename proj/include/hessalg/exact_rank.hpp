#ifndef HESSALG_EXACT_RANK_HPP
#define HESSALG_EXACT_RANK_HPP

#include <utility>
#include <vector>

#include "hessalg/polynomial.hpp"

namespace hessalg {

// one matrix row, nonzero integer entries sorted by column index
struct SparseRow {
  std::vector<std::pair<int, BigInt>> nz;
};

// clears denominators (and strips nothing else); entries must be sorted by
// column and free of duplicates
SparseRow make_integer_row(const std::vector<std::pair<int, Rational>>& entries);

// rank over Q by fraction-free sparse elimination: rows are sorted by sparsity,
// cross-multiplied against recorded pivots, and content-stripped after every
// combine so coefficients stay small
long long exact_rank(std::vector<SparseRow> rows);

// dense Bareiss single-step elimination; used as an independent cross-check
long long dense_bareiss_rank(std::vector<std::vector<BigInt>> a);

} // namespace hessalg

#endif
