#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hessalg/exact_rank.hpp"
#include "hessalg/graded.hpp"
#include "hessalg/polytext.hpp"
#include "helpers.hpp"

using namespace hessalg;
using testutil::capture;
using testutil::parse3;

namespace {

GradedIdeal jacobian_ideal(const Polynomial& f) {
  return GradedIdeal::of(f.vars(), jacobian_generators(f));
}

} // namespace

TEST_CASE("monomial bases come out grevlex-descending") {
  const auto basis = monomial_basis(3, 2);
  const std::vector<std::string> expected = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
  REQUIRE(basis.size() == expected.size());
  for (size_t i = 0; i < basis.size(); ++i)
    CHECK(basis[i] == parse3(expected[i]).leading_monomial());

  for (int v = 1; v <= 4; ++v)
    for (int m = 0; m <= 6; ++m)
      CHECK(static_cast<long long>(monomial_basis(v, m).size()) == graded_dim(v, m));
  CHECK(graded_dim(3, 0) == 1);
  CHECK(graded_dim(3, 5) == 21);
  CHECK(graded_dim(2, 7) == 8);
}

TEST_CASE("ideal construction validates and prunes generators") {
  const auto mixed = capture([] {
    GradedIdeal::of(3, {parse3("x"), parse_polynomial(PolyText{"y1", {"y1", "y2"}, {}})});
  });
  CHECK(mixed.threw);
  CHECK(mixed.code == Errc::variable_count_mismatch);

  const auto inhom = capture([] { GradedIdeal::of(3, {parse3("x^2 + y")}); });
  CHECK(inhom.threw);
  CHECK(inhom.code == Errc::not_homogeneous);

  const auto pruned = GradedIdeal::of(3, {Polynomial::zero(3), parse3("x^2")});
  CHECK(pruned.generators.size() == 1);
}

TEST_CASE("piece dimensions match hand counts") {
  const GradedIdeal zero_ideal = GradedIdeal::of(3, {});
  for (int m = 0; m <= 3; ++m) {
    CHECK(ideal_piece_dim(zero_ideal, m) == 0);
    CHECK(quotient_piece_dim(zero_ideal, m) == graded_dim(3, m));
  }

  const GradedIdeal unit = GradedIdeal::of(3, {parse3("1")});
  CHECK(quotient_piece_dim(unit, 0) == 0);
  CHECK(quotient_piece_dim(unit, 4) == 0);

  const Polynomial fermat6 = parse3("x^6 + y^6 + z^6");
  const GradedIdeal j6 = jacobian_ideal(fermat6);
  CHECK(quotient_piece_dim(j6, 4) == 15);
  CHECK(ideal_piece_dim(j6, 6) == 9);
  CHECK(quotient_piece_dim(j6, 6) == 19);

  const Polynomial cusps = parse3("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x + y + z)");
  CHECK(quotient_piece_dim(jacobian_ideal(cusps), 3) == 7);
}

TEST_CASE("full quotient sequences carry certified tails") {
  const GradedIdeal zero_ideal = GradedIdeal::of(3, {});
  const HilbertSeq free_ring = quotient_hilbert(zero_ideal, 3);
  CHECK(free_ring.coeffs == std::vector<long long>{1, 3, 6, 10});
  CHECK(!free_ring.tail.has_value());

  const HilbertSeq collapsed = quotient_hilbert(GradedIdeal::of(3, {parse3("1")}), 4, 4);
  CHECK(collapsed.coeffs == std::vector<long long>(5, 0));
  REQUIRE(collapsed.tail.has_value());
  CHECK(*collapsed.tail == StableTail{0, 0});

  const Polynomial cusps = parse3("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x + y + z)");
  const HilbertSeq milnor = quotient_hilbert(jacobian_ideal(cusps), 7, 7);
  CHECK(milnor.coeffs == std::vector<long long>{1, 3, 6, 7, 6, 6, 6, 6});
  REQUIRE(milnor.tail.has_value());
  CHECK(*milnor.tail == StableTail{4, 6});
}

TEST_CASE("tail detection finds the minimal stabilization degree") {
  const auto tail = detect_stable_tail({1, 3, 6, 7, 3, 3, 3, 3, 3}, 6);
  REQUIRE(tail.has_value());
  CHECK(*tail == StableTail{4, 3});

  const auto tight = detect_stable_tail({1, 2, 3}, 2);
  REQUIRE(tight.has_value());
  CHECK(*tight == StableTail{2, 3});

  CHECK(!detect_stable_tail({1, 2, 3, 2}, 2).has_value());
  CHECK_THROWS_AS((void)detect_stable_tail({1, 2, 3}, 3), std::invalid_argument);
}

TEST_CASE("sequence lookups respect the certified range") {
  HilbertSeq open;
  open.coeffs = {1, 3, 6};
  CHECK(open.value_at(2) == 6);
  const auto caught = capture([&open] { (void)open.value_at(3); });
  CHECK(caught.threw);
  CHECK(caught.code == Errc::insufficient_range);

  HilbertSeq closed;
  closed.coeffs = {1, 3, 6, 7, 6};
  closed.tail = StableTail{4, 6};
  CHECK(closed.value_at(100) == 6);
  CHECK(closed.extended(7) == std::vector<long long>{1, 3, 6, 7, 6, 6, 6});
}

TEST_CASE("syzygy counts ignore the Koszul subspace") {
  const Polynomial fermat6 = parse3("x^6 + y^6 + z^6");
  CHECK(essential_syzygy_dim(fermat6, 4) == 0);
  CHECK(!mdr(fermat6, 6).has_value());

  const Polynomial cusps = parse3("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x + y + z)");
  CHECK(essential_syzygy_dim(cusps, 1) == 0);
  CHECK(essential_syzygy_dim(cusps, 2) > 0);
  const auto r = mdr(cusps, 2);
  REQUIRE(r.has_value());
  CHECK(*r == 2);

  const Polynomial lines = parse3("(x^2 - y^2)*(y^2 - z^2)*(x^2 - z^2)");
  const auto rl = mdr(lines, 2);
  REQUIRE(rl.has_value());
  CHECK(*rl == 2);

  const auto caught = capture([] { essential_syzygy_dim(Polynomial::zero(3), 2); });
  CHECK(caught.threw);
  CHECK(caught.code == Errc::degree_too_low);
}

TEST_CASE("sparse and dense rank engines agree") {
  std::mt19937_64 rng(97);
  const auto to_sparse = [&rng](const std::vector<std::vector<BigInt>>& dense) {
    std::vector<SparseRow> rows;
    for (const auto& row : dense) {
      std::vector<std::pair<int, Rational>> entries;
      const long den = 1 + static_cast<long>(rng() % 3);
      for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0)
          entries.emplace_back(static_cast<int>(j),
                               Rational(row[j]) / Rational(BigInt(den)));
      rows.push_back(make_integer_row(entries));
    }
    return rows;
  };

  std::vector<std::vector<BigInt>> eye(5, std::vector<BigInt>(5, 0));
  for (size_t i = 0; i < 5; ++i) eye[i][i] = 1;
  CHECK(dense_bareiss_rank(eye) == 5);
  CHECK(exact_rank(to_sparse(eye)) == 5);
  CHECK(dense_bareiss_rank({{0, 0}, {0, 0}}) == 0);

  const std::vector<std::vector<BigInt>> planted = {
      {1, 2, 0, 3}, {2, 4, 0, 6}, {0, 1, 1, 1}, {1, 3, 1, 4}};
  CHECK(dense_bareiss_rank(planted) == 2);
  CHECK(exact_rank(to_sparse(planted)) == 2);

  for (int trial = 0; trial < 30; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 6);
    const int c = 2 + static_cast<int>(rng() % 6);
    std::vector<std::vector<BigInt>> a(static_cast<size_t>(r),
                                       std::vector<BigInt>(static_cast<size_t>(c), 0));
    for (auto& row : a)
      for (auto& x : row)
        if (rng() % 5 < 3) x = BigInt(static_cast<long>(rng() % 19) - 9);
    if (r >= 2 && rng() % 2) a[static_cast<size_t>(r - 1)] = a[0];
    const long long dense = dense_bareiss_rank(a);
    CHECK(dense <= std::min(r, c));
    CHECK(exact_rank(to_sparse(a)) == dense);
  }
}
