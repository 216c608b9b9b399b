#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hessalg/polynomial.hpp"
#include "hessalg/polytext.hpp"
#include "helpers.hpp"

using namespace hessalg;
using testutil::capture;
using testutil::eval;
using testutil::germ2;
using testutil::parse3;

namespace {

Polynomial parse2(const std::string& source, const std::vector<std::string>& names = {"y", "z"}) {
  return parse_polynomial(PolyText{source, names, {}});
}

// cofactor-free determinant oracle: signed sum over all permutations
Polynomial perm_det(const PolyMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total(m.vars());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    Polynomial prod = Polynomial::constant(m.vars(), 1);
    for (int i = 0; i < n; ++i) prod = prod * m.at(i, perm[static_cast<size_t>(i)]);
    total = inversions % 2 ? total - prod : total + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

} // namespace

TEST_CASE("arithmetic agrees with pointwise evaluation") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial a = testutil::rand_poly(rng, 3, 4, 4);
    const Polynomial b = testutil::rand_poly(rng, 3, 4, 4);
    const auto pt = testutil::rand_point(rng, 3);
    CHECK(eval(a + b, pt) == eval(a, pt) + eval(b, pt));
    CHECK(eval(a - b, pt) == eval(a, pt) - eval(b, pt));
    CHECK(eval(a * b, pt) == eval(a, pt) * eval(b, pt));
    CHECK(eval(-a, pt) == -eval(a, pt));
  }
}

TEST_CASE("operations on different rings are rejected") {
  const Polynomial p2 = parse2("y + z");
  const Polynomial p3 = parse3("x");
  for (const auto& op : {
           std::function<void()>([&] { (void)(p2 + p3); }),
           std::function<void()>([&] { (void)(p2 - p3); }),
           std::function<void()>([&] { (void)(p2 * p3); }),
       }) {
    const auto caught = capture(op);
    CHECK(caught.threw);
    CHECK(caught.code == Errc::variable_count_mismatch);
  }
}

TEST_CASE("degree and homogeneity conventions") {
  CHECK(Polynomial::zero(3).degree() == -1);
  CHECK(Polynomial::zero(3).is_homogeneous());
  CHECK(parse3("x^2 + y*z").is_homogeneous());
  CHECK(!parse3("x^2 + y").is_homogeneous());
  CHECK(parse3("x^3*y + z").degree() == 4);
}

TEST_CASE("derivatives differentiate one variable and validate the index") {
  const Polynomial f = parse3("x^3*y + 2*y*z");
  CHECK(f.derivative(0) == parse3("3*x^2*y"));
  CHECK(f.derivative(1) == parse3("x^3 + 2*z"));
  const auto caught = capture([&f] { f.derivative(3); });
  CHECK(caught.threw);
  CHECK(caught.code == Errc::index_out_of_range);
}

TEST_CASE("grevlex orders degree first, then the rightmost difference") {
  const std::vector<std::string> expected = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
  std::vector<Monomial> mons;
  for (const auto& src : expected) mons.push_back(parse3(src).leading_monomial());
  std::vector<Monomial> shuffled = {mons[3], mons[0], mons[5], mons[1], mons[4], mons[2]};
  std::sort(shuffled.begin(), shuffled.end(), GrevlexDesc{});
  for (size_t i = 0; i < mons.size(); ++i) CHECK(shuffled[i] == mons[i]);
  CHECK(grevlex_cmp(mons[0], mons[0]) == 0);
  CHECK(grevlex_cmp(mons[0], mons[1]) > 0);
  CHECK(grevlex_cmp(mons[5], mons[2]) < 0);
}

TEST_CASE("jet truncation keeps the terms below the bound") {
  const Polynomial p = parse2("1 + y + y*z + y^2*z + z^4", {"y", "z"});
  CHECK(p.truncated_below(3) == parse2("1 + y + y*z", {"y", "z"}));
  CHECK(p.truncated_below(1) == parse2("1", {"y", "z"}));
  CHECK(p.truncated_below(0).is_zero());
}

TEST_CASE("substitution composes ring maps") {
  const Polynomial g = germ2("y1^2 + y2^3");
  const Polynomial image = g.substitute({germ2("y1 + y2^2"), germ2("y2")});
  CHECK(image == germ2("y1^2 + 2*y1*y2^2 + y2^4 + y2^3"));

  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = testutil::rand_poly(rng, 2, 3, 3);
    const std::vector<Polynomial> images = {testutil::rand_poly(rng, 2, 2, 3),
                                            testutil::rand_poly(rng, 2, 2, 3)};
    const auto pt = testutil::rand_point(rng, 2);
    CHECK(eval(p.substitute(images), pt) ==
          eval(p, {eval(images[0], pt), eval(images[1], pt)}));
  }

  const auto caught = capture([&g] { g.substitute({germ2("y1")}); });
  CHECK(caught.threw);
  CHECK(caught.code == Errc::arity_mismatch);
}

TEST_CASE("first-order generators satisfy the degree identity") {
  const Polynomial f = parse3("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x + y + z)");
  const auto partials = jacobian_generators(f);
  REQUIRE(partials.size() == 3);
  CHECK(partials[0] == parse3("2*x*y^2 + 2*x*z^2 - 4*x*y*z - 2*y^2*z - 2*y*z^2"));

  std::mt19937_64 rng(93);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const Polynomial g = testutil::rand_form(rng, 3, d, 4);
    const auto gp = jacobian_generators(g);
    Polynomial total(3);
    for (int i = 0; i < 3; ++i) total = total + Polynomial::variable(3, i) * gp[static_cast<size_t>(i)];
    CHECK(total == g.scaled(d));
  }

  const auto caught = capture([] { jacobian_generators(parse3("x^2 + y")); });
  CHECK(caught.threw);
  CHECK(caught.code == Errc::not_homogeneous);
}

TEST_CASE("second-derivative matrices need degree at least two") {
  const PolyMatrix h = second_partials(germ2("y1^2*y2 + y2^3"));
  CHECK(h.at(0, 0) == germ2("2*y2"));
  CHECK(h.at(0, 1) == germ2("2*y1"));
  CHECK(h.at(1, 0) == germ2("2*y1"));
  CHECK(h.at(1, 1) == germ2("6*y2"));

  const auto low = capture([] { hessian_matrix(parse3("x")); });
  CHECK(low.threw);
  CHECK(low.code == Errc::degree_too_low);
  const auto inhom = capture([] { hessian_matrix(parse3("x^2 + y")); });
  CHECK(inhom.threw);
  CHECK(inhom.code == Errc::not_homogeneous);

  std::mt19937_64 rng(94);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const Polynomial g = testutil::rand_form(rng, 3, d, 4);
    const PolyMatrix m = hessian_matrix(g);
    const auto gp = jacobian_generators(g);
    for (int i = 0; i < 3; ++i) {
      Polynomial total(3);
      for (int j = 0; j < 3; ++j) total = total + Polynomial::variable(3, j) * m.at(i, j);
      CHECK(total == gp[static_cast<size_t>(i)].scaled(d - 1));
    }
  }
}

TEST_CASE("determinants match the permutation expansion") {
  std::mt19937_64 rng(95);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      PolyMatrix m(n, n, 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = testutil::rand_poly(rng, 2, 2, 2);
      CHECK(determinant(m) == perm_det(m));
    }
  }
  PolyMatrix rect(2, 3, 1);
  const auto caught = capture([&rect] { determinant(rect); });
  CHECK(caught.threw);
  CHECK(caught.code == Errc::not_square);
}

TEST_CASE("minor lists drop zeros and deduplicate up to sign") {
  PolyMatrix identity(2, 2, 3);
  identity.at(0, 0) = Polynomial::constant(3, 1);
  identity.at(1, 1) = Polynomial::constant(3, 1);
  const auto units = k_minors(identity, 1);
  REQUIRE(units.size() == 1);
  CHECK(units[0] == Polynomial::constant(3, 1));

  PolyMatrix diag(3, 3, 3);
  diag.at(0, 0) = parse3("6*x");
  diag.at(1, 1) = parse3("6*y");
  diag.at(2, 2) = parse3("6*z");
  const auto dets = k_minors(diag, 3);
  REQUIRE(dets.size() == 1);
  CHECK(dets[0] == parse3("216*x*y*z"));

  PolyMatrix skew(2, 2, 3);
  skew.at(0, 1) = parse3("x");
  skew.at(1, 0) = parse3("-x");
  const auto entries = k_minors(skew, 1);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0] == parse3("x"));

  PolyMatrix sym(3, 3, 6);
  const auto v = [](int i) { return Polynomial::variable(6, i); };
  sym.at(0, 0) = v(0); sym.at(0, 1) = v(1); sym.at(0, 2) = v(2);
  sym.at(1, 0) = v(1); sym.at(1, 1) = v(3); sym.at(1, 2) = v(4);
  sym.at(2, 0) = v(2); sym.at(2, 1) = v(4); sym.at(2, 2) = v(5);
  CHECK(k_minors(sym, 2).size() == 6);
  CHECK(k_minors(sym, 1).size() == 6);

  for (int k : {0, 4}) {
    const auto caught = capture([&sym, k] { k_minors(sym, k); });
    CHECK(caught.threw);
    CHECK(caught.code == Errc::k_out_of_range);
  }
}

TEST_CASE("chart restriction produces the local equation") {
  const Polynomial f = parse3("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x + y + z)");
  const Polynomial g = dehomogenize(f, 0);
  CHECK(g == parse2("y^2 + z^2 + y^2*z^2 - 2*y*z*(1 + y + z)"));

  const auto partials = jacobian_generators(f);
  Polynomial euler = dehomogenize(partials[0], 0);
  euler = euler + parse2("y") * dehomogenize(partials[1], 0);
  euler = euler + parse2("z") * dehomogenize(partials[2], 0);
  CHECK(euler == g.scaled(4));

  const auto bad_chart = capture([&f] { dehomogenize(f, 3); });
  CHECK(bad_chart.threw);
  CHECK(bad_chart.code == Errc::index_out_of_range);
  const auto inhom = capture([] { dehomogenize(parse3("x^2 + y"), 0); });
  CHECK(inhom.threw);
  CHECK(inhom.code == Errc::not_homogeneous);
}

TEST_CASE("coordinate changes relocate the studied point") {
  std::mt19937_64 rng(96);
  const Polynomial f = parse3("x^4 + y^4 + z^4 - 3*x^2*y*z");
  for (int trial = 0; trial < 12; ++trial) {
    RatMatrix change(3, std::vector<Rational>(3, 0));
    for (int i = 0; i < 3; ++i) {
      change[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      for (int j = i + 1; j < 3; ++j)
        change[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            testutil::rand_rational(rng);
    }
    const int chart = static_cast<int>(rng() % 3);
    const Polynomial g = dehomogenize(f, chart, change);

    std::vector<Rational> target(3, 0);
    target[static_cast<size_t>(chart)] = 1;
    std::vector<Rational> affine = testutil::rand_point(rng, 2);
    int slot = 0;
    for (int i = 0; i < 3; ++i)
      if (i != chart) target[static_cast<size_t>(i)] = affine[static_cast<size_t>(slot++)];

    // back-substitution solves change * source = target for the upper
    // triangular unit-diagonal change
    std::vector<Rational> source(3, 0);
    for (int i = 2; i >= 0; --i) {
      Rational value = target[static_cast<size_t>(i)];
      for (int j = i + 1; j < 3; ++j)
        value -= change[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                 source[static_cast<size_t>(j)];
      source[static_cast<size_t>(i)] = value;
    }
    CHECK(eval(f, source) == eval(g, affine));
  }

  const RatMatrix singular = {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}};
  const auto caught = capture([&f, &singular] { dehomogenize(f, 0, singular); });
  CHECK(caught.threw);
  CHECK(caught.code == Errc::singular_change_matrix);
}
