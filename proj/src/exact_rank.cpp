#include "hessalg/exact_rank.hpp"

#include <algorithm>
#include <map>

namespace hessalg {

SparseRow make_integer_row(const std::vector<std::pair<int, Rational>>& entries) {
  BigInt lcm = 1;
  for (const auto& [col, v] : entries) {
    if (v == 0) continue;
    BigInt den = v.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  SparseRow row;
  row.nz.reserve(entries.size());
  for (const auto& [col, v] : entries) {
    if (v == 0) continue;
    Rational scaled = v * Rational(lcm);
    row.nz.emplace_back(col, scaled.get_num());
  }
  return row;
}

namespace {

void strip_content(SparseRow& row) {
  if (row.nz.empty()) return;
  BigInt g = 0;
  for (const auto& [col, v] : row.nz) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  bool flip = row.nz.front().second < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& [col, v] : row.nz) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    v = q;
  }
}

// eliminates the shared leading column: row*pivot_lead - pivot*row_lead
SparseRow combine(const SparseRow& row, const SparseRow& pivot) {
  const BigInt& row_lead = row.nz.front().second;
  const BigInt& piv_lead = pivot.nz.front().second;
  SparseRow out;
  out.nz.reserve(row.nz.size() + pivot.nz.size());
  size_t i = 1, j = 1;
  while (i < row.nz.size() || j < pivot.nz.size()) {
    if (j >= pivot.nz.size() ||
        (i < row.nz.size() && row.nz[i].first < pivot.nz[j].first)) {
      out.nz.emplace_back(row.nz[i].first, row.nz[i].second * piv_lead);
      ++i;
    } else if (i >= row.nz.size() || pivot.nz[j].first < row.nz[i].first) {
      out.nz.emplace_back(pivot.nz[j].first, -(pivot.nz[j].second * row_lead));
      ++j;
    } else {
      BigInt v = row.nz[i].second * piv_lead - pivot.nz[j].second * row_lead;
      if (v != 0) out.nz.emplace_back(row.nz[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

long long exact_rank(std::vector<SparseRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) {
                     return a.nz.size() < b.nz.size();
                   });
  std::map<int, SparseRow> pivots;
  long long rank = 0;
  for (auto& row : rows) {
    strip_content(row);
    while (!row.nz.empty()) {
      int lead = row.nz.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      row = combine(row, it->second);
      strip_content(row);
    }
  }
  return rank;
}

long long dense_bareiss_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty() || a[0].empty()) return 0;
  size_t nr = a.size(), nc = a[0].size();
  size_t r = 0;
  BigInt prev = 1;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    if (p != r) std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < nr; ++i) {
      for (size_t j = c + 1; j < nc; ++j) {
        BigInt t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<long long>(r);
}

} // namespace hessalg
