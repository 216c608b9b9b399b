#include "hessalg/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "hessalg/error.hpp"
#include "hessalg/hessian.hpp"
#include "hessalg/localalg.hpp"
#include "hessalg/polytext.hpp"
#include "hessalg/strata.hpp"

namespace hessalg {

namespace {

const std::vector<std::string> kVars3 = {"x", "y", "z"};

Polynomial form3(const std::string& source) {
  return parse_polynomial(PolyText{source, kVars3, {}});
}

Polynomial germ_n(int n, const std::string& source) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  return parse_polynomial(PolyText{source, vars, {}});
}

std::string join_ll(const std::vector<long long>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

std::string fmt_series(const HilbertSeq& seq) {
  std::ostringstream out;
  out << join_ll(seq.coeffs);
  if (seq.tail)
    out << " tail(" << seq.tail->stable_from << ',' << seq.tail->stable_value << ')';
  else
    out << " no-tail";
  return out.str();
}

FixtureResult expect_series(const HilbertSeq& got, const std::vector<long long>& prefix,
                            const StableTail& tail, bool from_is_upper_bound = false) {
  HilbertSeq expected;
  expected.coeffs = prefix;
  expected.tail = tail;
  FixtureResult result;
  result.detail = "got " + fmt_series(got);
  if (got.coeffs.size() < prefix.size()) {
    result.detail += "; expected at least " + std::to_string(prefix.size()) + " coefficients";
    return result;
  }
  for (size_t m = 0; m < got.coeffs.size(); ++m) {
    if (got.coeffs[m] != expected.value_at(static_cast<long long>(m))) {
      result.detail += "; expected " + join_ll(expected.extended(got.coeffs.size()));
      return result;
    }
  }
  if (!got.tail) {
    result.detail += "; expected a certified tail";
    return result;
  }
  if (got.tail->stable_value != tail.stable_value ||
      (from_is_upper_bound ? got.tail->stable_from > tail.stable_from
                           : got.tail->stable_from != tail.stable_from)) {
    result.detail += "; expected tail(" + std::to_string(tail.stable_from) +
                     (from_is_upper_bound ? "-or-earlier," : ",") +
                     std::to_string(tail.stable_value) + ")";
    return result;
  }
  result.pass = true;
  return result;
}

FixtureResult expect_value(const std::string& name, long long got, long long want) {
  FixtureResult result;
  result.detail = name + " = " + std::to_string(got);
  if (got != want) {
    result.detail += ", expected " + std::to_string(want);
    return result;
  }
  result.pass = true;
  return result;
}

FixtureResult merge(std::initializer_list<FixtureResult> parts) {
  FixtureResult result;
  result.pass = true;
  for (const auto& part : parts) {
    if (!result.detail.empty()) result.detail += "; ";
    result.detail += part.detail;
    result.pass = result.pass && part.pass;
  }
  return result;
}

std::string fmt_opt(const std::optional<long long>& value) {
  return value ? std::to_string(*value) : std::string("absent");
}

FixtureResult expect_opt(const std::string& name, const std::optional<long long>& got,
                         const std::optional<long long>& want) {
  FixtureResult result;
  result.detail = name + " = " + fmt_opt(got);
  if (got != want) {
    result.detail += ", expected " + fmt_opt(want);
    return result;
  }
  result.pass = true;
  return result;
}

const char* kExcusp = "x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x + y + z)";
const char* kExlines = "(x^2 - y^2)*(y^2 - z^2)*(x^2 - z^2)";
const char* kFermat4 = "x^4 + y^4 + z^4";
const char* kFermat5 = "x^5 + y^5 + z^5";
const char* kFermat6 = "x^6 + y^6 + z^6";
const char* kTwoSmoothPrime = "x^6 + y^6 + z^6 + 2*x*y*z^4 + 3*x*y^4*z + 5*x^4*y*z";
const char* kTwoSmoothC = "x^6 + y^6 + z^6 + 3*x^2*y^2*z^2";
const char* kTwoSmoothC3 = "x^6 + y^6 + z^6 + 3*x^2*y^2*z^2 + 3*x*y*z^4";
const char* kSixA2X = "(x^2 + y^2)^3 + (y^3 + z^3)^2";
const char* kOka =
    "27*(x+y)^3*(x+y-z)^2*(x+y+2*z) - 27*(x+y)^2*(x+y-z)^2*((x-y)^2-z^2)"
    " + 9*((x+y)^2-z^2)*((x-y)^2-z^2)^2 - ((x-y)^2-z^2)^3";
const char* kThreeNodesX = "x^2*y^2 + y^2*z^2 + z^2*x^2";
const char* kThreeNodesY = "(x^3 + y^3 + z^3)*(x + y + z)";
const char* kThreePara = "x^6 + y^6 + z^6 + a*x^4*y*z + b*x*y^4*z + c*x*y*z^4";

Fixture series_fixture(std::string id, std::string provenance, std::string summary,
                       std::string source, int k, std::vector<long long> prefix,
                       StableTail tail, bool from_is_upper_bound = false) {
  Fixture fixture;
  fixture.id = std::move(id);
  fixture.provenance = std::move(provenance);
  fixture.summary = std::move(summary);
  fixture.run = [source = std::move(source), k, prefix = std::move(prefix), tail,
                 from_is_upper_bound]() {
    const Polynomial f = form3(source);
    const HilbertSeq got = k == 0 ? milnor_series(f) : hessian_algebra_series(f, k);
    return expect_series(got, prefix, tail, from_is_upper_bound);
  };
  return fixture;
}

Fixture chi_fixture(std::string id, std::string ade_name) {
  Fixture fixture;
  fixture.id = std::move(id);
  fixture.provenance = "golden";
  fixture.summary = "local invariant ladder of the " + ade_name + " germ";
  fixture.run = [ade_name = std::move(ade_name)]() {
    const AdeGerm* entry = ade_lookup(ade_name);
    if (!entry) fail(Errc::corrupt_fixture, "unknown catalog germ " + ade_name);
    const LocalInvariants got = chi_invariants(germ_n(entry->n, entry->source));
    FixtureResult result;
    result.detail = "chi = (" + join_ll(got.chi) + ")";
    if (got.chi != entry->chi) {
      result.detail += ", expected (" + join_ll(entry->chi) + ")";
      return result;
    }
    result.pass = true;
    return result;
  };
  return fixture;
}

Fixture reconcile_fixture(std::string id, std::string summary, std::string source,
                          std::vector<std::pair<std::string, long long>> germ_sources,
                          std::vector<long long> expected_totals) {
  Fixture fixture;
  fixture.id = std::move(id);
  fixture.provenance = "golden";
  fixture.summary = std::move(summary);
  fixture.run = [source = std::move(source), germ_sources = std::move(germ_sources),
                 expected_totals = std::move(expected_totals)]() {
    std::vector<std::pair<Polynomial, long long>> germs;
    for (const auto& [src, mult] : germ_sources) germs.emplace_back(germ_n(2, src), mult);
    const ReconcileReport report = reconcile_global_local(form3(source), germs);
    FixtureResult result;
    std::ostringstream detail;
    bool pass = report.ok;
    for (const auto& row : report.rows) {
      detail << "k=" << row.k << ": " << row.global_stable << " vs " << row.local_sum << "; ";
      if (row.k >= 1 && static_cast<size_t>(row.k) <= expected_totals.size() &&
          row.global_stable != expected_totals[static_cast<size_t>(row.k) - 1])
        pass = false;
    }
    result.detail = detail.str();
    result.pass = pass;
    return result;
  };
  return fixture;
}

Fixture prop_a_fixture(std::string id, std::string source, int expected_case) {
  Fixture fixture;
  fixture.id = std::move(id);
  fixture.provenance = "direct";
  fixture.summary = "top-order quotient against the Jacobian quotient";
  fixture.run = [source = std::move(source), expected_case]() {
    const PropAVerdict verdict = verify_prop_A(form3(source));
    FixtureResult result;
    result.detail = "case " + std::to_string(verdict.case_index) +
                    (verdict.ok ? ", agrees" : ", disagrees at degree " +
                                                   fmt_opt(verdict.offending_degree));
    result.pass = verdict.ok && verdict.case_index == expected_case;
    if (!result.pass) result.detail += ", expected case " + std::to_string(expected_case);
    return result;
  };
  return fixture;
}

Fixture countwh_fixture(std::string id, std::string source, std::optional<long long> m_eval,
                        long long expected_count, long long expected_milnor,
                        long long expected_hn) {
  Fixture fixture;
  fixture.id = std::move(id);
  fixture.provenance = "golden";
  fixture.summary = "count of weighted homogeneous singular points";
  fixture.run = [source = std::move(source), m_eval, expected_count, expected_milnor,
                 expected_hn]() {
    const CountWh got = count_weighted_homogeneous(form3(source), m_eval);
    return merge({expect_value("count", got.count, expected_count),
                  expect_value("milnor_dim", got.milnor_dim, expected_milnor),
                  expect_value("hn_dim", got.hn_dim, expected_hn)});
  };
  return fixture;
}

FixtureResult run_three_para_fixture() {
  PolyText family;
  family.source = kThreePara;
  family.variable_names = kVars3;
  family.parameter_names = {"a", "b", "c"};

  std::vector<std::vector<Rational>> assignments = sample_assignments(1, 1, 3);
  const std::vector<std::vector<long>> specials = {
      {1, 1, 5}, {3, 3, 3}, {1, 1, 0}, {2, 2, 2}, {0, 0, 1}, {0, 0, 0}};
  for (const auto& tuple : specials) {
    std::vector<Rational> row;
    for (long value : tuple) row.emplace_back(static_cast<int>(value));
    assignments.push_back(std::move(row));
  }

  StrataReport report = evaluate_family(family, assignments, {1});
  partition_by_series(report);
  const std::string dot = hasse_dot(report, {1});

  FixtureResult result;
  for (const auto& sample : report.samples)
    if (sample.failed) {
      result.detail = "sample failed: " + sample.diagnostic;
      return result;
    }
  if (report.strata.size() != 7) {
    result.detail = "found " + std::to_string(report.strata.size()) + " strata, expected 7";
    return result;
  }

  const std::vector<std::vector<long long>> expected_prefix = {
      {1, 3, 6, 10, 9, 3},
      {1, 3, 6, 10, 9, 4},
      {1, 3, 6, 10, 9, 6},
      {1, 3, 6, 10, 9, 4, 1},
      {1, 3, 6, 10, 9, 6, 2},
      {1, 3, 6, 10, 9, 7, 3, 1},
      {1, 3, 6, 10, 12, 12, 10, 6, 3, 1},
  };
  for (size_t s = 0; s < 7; ++s) {
    if (report.strata[s].size() != 1 || report.strata[s][0] != static_cast<int>(s)) {
      result.detail = "stratum S" + std::to_string(s + 1) + " does not hold exactly sample " +
                      std::to_string(s);
      return result;
    }
    HilbertSeq expected;
    expected.coeffs = expected_prefix[s];
    expected.tail = StableTail{static_cast<long long>(expected_prefix[s].size()), 0};
    const auto& got = report.samples[s].series.at(1);
    const auto want = expected.extended(got.coeffs.size());
    if (got.coeffs != want) {
      result.detail = "stratum S" + std::to_string(s + 1) + " series " + join_ll(got.coeffs) +
                      ", expected " + join_ll(want);
      return result;
    }
  }

  std::vector<std::pair<int, int>> covers = report.covers;
  std::sort(covers.begin(), covers.end());
  std::vector<std::pair<int, int>> expected_covers = {{1, 0}, {2, 1}, {3, 1}, {4, 2},
                                                      {4, 3}, {5, 4}, {6, 5}};
  std::sort(expected_covers.begin(), expected_covers.end());
  if (covers != expected_covers) {
    std::ostringstream detail;
    detail << "cover edges";
    for (const auto& [hi, lo] : report.covers) detail << " S" << hi + 1 << ">S" << lo + 1;
    detail << ", expected S2>S1 S3>S2 S4>S2 S5>S3 S5>S4 S6>S5 S7>S6";
    result.detail = detail.str();
    return result;
  }
  if (dot.find("->") == std::string::npos) {
    result.detail = "dot output carries no edges";
    return result;
  }
  result.pass = true;
  result.detail = "7 strata, 7 cover edges as expected";
  return result;
}

FixtureResult run_incomparable_fixture() {
  PolyText family;
  family.source = "x^6 + y^6 + z^6 + 3*x^2*y^2*z^2 + c*x*y*z^4";
  family.variable_names = kVars3;
  family.parameter_names = {"c"};
  const std::vector<std::vector<Rational>> assignments = {{Rational(0)}, {Rational(3)}};
  StrataReport report = evaluate_family(family, assignments, {1, 2});
  partition_by_series(report);
  hasse_dot(report, {1, 2});
  FixtureResult result;
  if (report.strata.size() != 2) {
    result.detail = "found " + std::to_string(report.strata.size()) + " strata, expected 2";
    return result;
  }
  if (!report.covers.empty()) {
    result.detail = "expected no cover edges between incomparable strata, found " +
                    std::to_string(report.covers.size());
    return result;
  }
  result.pass = true;
  result.detail = "two strata, incomparable, no edge";
  return result;
}

std::vector<Fixture> build_corpus() {
  std::vector<Fixture> corpus;

  corpus.push_back(series_fixture("excusp.H1", "golden", "order-1 series of the three-cusp quartic",
                                  kExcusp, 1, {1, 3, 0}, {2, 0}));
  corpus.push_back(series_fixture("excusp.H2", "golden", "order-2 series of the three-cusp quartic",
                                  kExcusp, 2, {1, 3, 6, 7, 3}, {4, 3}));
  corpus.push_back(series_fixture("excusp.H3M", "golden",
                                  "top-order series of the three-cusp quartic",
                                  kExcusp, 3, {1, 3, 6, 7, 6}, {4, 6}));
  corpus.push_back(series_fixture("excusp.M", "golden", "Jacobian series of the three-cusp quartic",
                                  kExcusp, 0, {1, 3, 6, 7, 6}, {4, 6}));

  {
    Fixture fixture;
    fixture.id = "excusp.thresholds";
    fixture.provenance = "golden";
    fixture.summary = "threshold degrees of the three-cusp quartic";
    fixture.run = []() {
      const Thresholds got = thresholds(form3(kExcusp));
      FixtureResult vectors;
      vectors.pass = got.T_k && *got.T_k == std::vector<long long>{4, 6, 8} &&
                     got.tilde_T == std::vector<long long>{8, 10, 12} && got.hat_T &&
                     *got.hat_T == std::vector<long long>{6, 6, 8};
      vectors.detail = vectors.pass ? "T_k/tilde/hat vectors as expected"
                                    : "T_k/tilde/hat vectors off";
      return merge({expect_opt("ct", got.ct, 4), expect_opt("mdr", got.mdr, 2),
                    expect_opt("st", got.st, 4), expect_opt("tau", got.tau_total, 6),
                    expect_value("T", got.T, 6), vectors});
    };
    corpus.push_back(std::move(fixture));
  }

  corpus.push_back(countwh_fixture("excusp.countwh", kExcusp, std::nullopt, 3, 6, 3));
  corpus.push_back(reconcile_fixture("excusp.reconcile",
                                     "global stable values against three cusp germs", kExcusp,
                                     {{"y1^2 + y2^3", 3}}, {0, 3, 6}));
  corpus.push_back(prop_a_fixture("excusp.propA", kExcusp, 2));

  corpus.push_back(series_fixture("exlines.H1", "golden", "order-1 series of the six-line sextic",
                                  kExlines, 1, {1, 3, 6, 10, 10, 7, 5, 4}, {7, 4}));
  corpus.push_back(series_fixture("exlines.H2", "golden", "order-2 series of the six-line sextic",
                                  kExlines, 2, {1, 3, 6, 10, 15, 18, 19, 19, 13, 12}, {9, 12}));
  corpus.push_back(series_fixture("exlines.H3M", "golden",
                                  "top-order series of the six-line sextic",
                                  kExlines, 3, {1, 3, 6, 10, 15, 18, 19}, {6, 19}));
  corpus.push_back(series_fixture("exlines.M", "golden", "Jacobian series of the six-line sextic",
                                  kExlines, 0, {1, 3, 6, 10, 15, 18, 19}, {6, 19}));

  {
    Fixture fixture;
    fixture.id = "exlines.thresholds";
    fixture.provenance = "golden";
    fixture.summary = "threshold degrees of the six-line sextic";
    fixture.run = []() {
      const Thresholds got = thresholds(form3(kExlines));
      FixtureResult vectors;
      vectors.pass = got.T_k && *got.T_k == std::vector<long long>{10, 14, 18} &&
                     got.tilde_T == std::vector<long long>{16, 20, 24} && got.hat_T &&
                     *got.hat_T == std::vector<long long>{12, 14, 18};
      vectors.detail = vectors.pass ? "T_k/tilde/hat vectors as expected"
                                    : "T_k/tilde/hat vectors off";
      return merge({expect_opt("ct", got.ct, 6), expect_opt("mdr", got.mdr, 2),
                    expect_opt("st", got.st, 6), expect_opt("tau", got.tau_total, 19),
                    expect_value("T", got.T, 12), vectors});
    };
    corpus.push_back(std::move(fixture));
  }

  corpus.push_back(countwh_fixture("exlines.countwh", kExlines, std::nullopt, 7, 19, 12));
  corpus.push_back(countwh_fixture("exlines.countwh.m10", kExlines, 10, 7, 19, 12));
  corpus.push_back(reconcile_fixture(
      "exlines.reconcile", "global stable values against three nodes and four triple points",
      kExlines, {{"y1^2 + y2^2", 3}, {"y1^2*y2 + y2^3", 4}}, {4, 12, 19}));
  corpus.push_back(prop_a_fixture("exlines.propA", kExlines, 2));

  corpus.push_back(series_fixture("fermat6.M", "golden", "Jacobian series of the smooth sextic",
                                  kFermat6, 0,
                                  {1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1}, {13, 0}));
  corpus.push_back(series_fixture("fermat6.H2", "golden", "order-2 series of the smooth sextic",
                                  kFermat6, 2,
                                  {1, 3, 6, 10, 15, 18, 19, 18, 12, 7, 3}, {11, 0}));
  corpus.push_back(series_fixture("fermat6.H1", "golden", "order-1 series of the smooth sextic",
                                  kFermat6, 1, {1, 3, 6, 10, 12, 12, 10, 6, 3, 1}, {10, 0}));

  {
    Fixture fixture;
    fixture.id = "fermat6.thresholds";
    fixture.provenance = "golden";
    fixture.summary = "threshold degrees of the smooth sextic";
    fixture.run = []() {
      const Thresholds got = thresholds(form3(kFermat6));
      FixtureResult smooth;
      smooth.pass = got.smooth && !got.ct && !got.mdr && !got.T_k && !got.hat_T;
      smooth.detail = smooth.pass ? "smooth, no coincidence degree"
                                  : "expected the smooth verdict with ct/mdr/T_k absent";
      return merge({smooth, expect_opt("st", got.st, 13), expect_opt("tau", got.tau_total, 0)});
    };
    corpus.push_back(std::move(fixture));
  }

  corpus.push_back(prop_a_fixture("fermat4.propA", kFermat4, 1));
  corpus.push_back(prop_a_fixture("fermat6.propA", kFermat6, 1));

  corpus.push_back(series_fixture("2smooth.fprime.H2", "golden",
                                  "order-2 series of the perturbed smooth sextic",
                                  kTwoSmoothPrime, 2, {1, 3, 6, 10, 15, 18, 19, 18, 9}, {9, 0}));
  corpus.push_back(series_fixture("2smooth.fprime.H1", "golden",
                                  "order-1 series of the perturbed smooth sextic",
                                  kTwoSmoothPrime, 1, {1, 3, 6, 10, 9, 3}, {6, 0}));
  corpus.push_back(series_fixture("2smooth.fprime.M", "golden",
                                  "Jacobian series of the perturbed smooth sextic",
                                  kTwoSmoothPrime, 0,
                                  {1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1}, {13, 0}));

  corpus.push_back(series_fixture("2smoothC.fsec.H2", "golden",
                                  "order-2 series of the symmetric smooth sextic",
                                  kTwoSmoothC, 2, {1, 3, 6, 10, 15, 18, 19, 18, 9}, {9, 0}));
  corpus.push_back(series_fixture("2smoothC.fsec.H1", "golden",
                                  "order-1 series of the symmetric smooth sextic",
                                  kTwoSmoothC, 1, {1, 3, 6, 10, 9, 6}, {6, 0}));
  corpus.push_back(series_fixture("2smoothC.fsec3.H2", "golden",
                                  "order-2 series of the tweaked symmetric sextic",
                                  kTwoSmoothC3, 2, {1, 3, 6, 10, 15, 18, 19, 18, 9, 2}, {10, 0}));
  corpus.push_back(series_fixture("2smoothC.fsec3.H1", "golden",
                                  "order-1 series of the tweaked symmetric sextic",
                                  kTwoSmoothC3, 1, {1, 3, 6, 10, 9, 4}, {6, 0}));

  {
    Fixture fixture;
    fixture.id = "2smoothC.incomparable";
    fixture.provenance = "golden";
    fixture.summary = "two smooth sextics with crossing series draw no edge";
    fixture.run = run_incomparable_fixture;
    corpus.push_back(std::move(fixture));
  }

  corpus.push_back(series_fixture("ex6A2.X.M", "golden",
                                  "Jacobian series of the six-cusp sextic",
                                  kSixA2X, 0, {1, 3, 6, 10, 15, 18, 19, 18, 16, 13}, {10, 12}));
  corpus.push_back(series_fixture("ex6A2.Y.M", "golden",
                                  "Jacobian series of the six-cusp sextic with conic",
                                  kOka, 0, {1, 3, 6, 10, 15, 18, 19, 18, 15}, {9, 12}));

  {
    Fixture fixture;
    fixture.id = "ex6A2.X.thresholds";
    fixture.provenance = "golden";
    fixture.summary = "coincidence and syzygy degrees of the six-cusp sextic";
    fixture.run = []() {
      const Thresholds got = thresholds(form3(kSixA2X));
      return merge({expect_opt("ct", got.ct, 7), expect_opt("mdr", got.mdr, 3),
                    expect_opt("tau", got.tau_total, 12)});
    };
    corpus.push_back(std::move(fixture));
  }
  {
    Fixture fixture;
    fixture.id = "ex6A2.Y.thresholds";
    fixture.provenance = "golden";
    fixture.summary = "coincidence and syzygy degrees of the six-cusp sextic with conic";
    fixture.run = []() {
      const Thresholds got = thresholds(form3(kOka));
      return merge({expect_opt("ct", got.ct, 8), expect_opt("mdr", got.mdr, 4),
                    expect_opt("tau", got.tau_total, 12)});
    };
    corpus.push_back(std::move(fixture));
  }

  corpus.push_back(prop_a_fixture("ex6A2.X.propA", kSixA2X, 2));
  corpus.push_back(prop_a_fixture("ex6A2.Y.propA", kOka, 2));

  corpus.push_back(chi_fixture("exnodal.chi.n2", "A1"));
  corpus.push_back(chi_fixture("exnodal.chi.n3", "A1_3"));
  corpus.push_back(chi_fixture("excusp.chi.A2", "A2"));
  corpus.push_back(chi_fixture("excusp.chi.A3", "A3"));
  corpus.push_back(chi_fixture("excusp.chi.A5", "A5"));
  corpus.push_back(chi_fixture("exD.chi.D4", "D4"));
  corpus.push_back(chi_fixture("exD.chi.D5", "D5"));
  corpus.push_back(chi_fixture("simplecurves.chi.E6", "E6"));
  corpus.push_back(chi_fixture("simplecurves.chi.E7", "E7"));
  corpus.push_back(chi_fixture("simplecurves.chi.E8", "E8"));

  {
    Fixture fixture;
    fixture.id = "ade.mu";
    fixture.provenance = "golden";
    fixture.summary = "Milnor numbers across the catalog of simple germs";
    fixture.run = []() {
      FixtureResult result;
      result.pass = true;
      for (const auto& entry : ade_catalog()) {
        const long long got = milnor_number(germ_n(entry.n, entry.source));
        if (!result.detail.empty()) result.detail += ", ";
        result.detail += entry.name + "=" + std::to_string(got);
        if (got != entry.mu) {
          result.detail += " (expected " + std::to_string(entry.mu) + ")";
          result.pass = false;
        }
      }
      return result;
    };
    corpus.push_back(std::move(fixture));
  }

  for (int d : {4, 5, 6}) {
    Fixture fixture;
    fixture.id = "nodalcurves.H2.d" + std::to_string(d);
    fixture.provenance = "golden";
    fixture.summary = "order-2 vanishing degree for the one-node curve of degree " +
                      std::to_string(d);
    fixture.run = [d]() {
      const std::string source = "x*y*z^" + std::to_string(d - 2) + " + x^" + std::to_string(d) +
                                 " + y^" + std::to_string(d);
      const HilbertSeq got = hessian_algebra_series(form3(source), 2);
      const long long cutoff = 3LL * d - 7;
      FixtureResult result;
      result.detail = fmt_series(got);
      for (size_t m = 0; m < got.coeffs.size(); ++m) {
        if (static_cast<long long>(m) >= cutoff && got.coeffs[m] != 0) {
          result.detail += "; expected 0 from degree " + std::to_string(cutoff);
          return result;
        }
      }
      if (got.coeffs[static_cast<size_t>(cutoff) - 1] == 0) {
        result.detail += "; expected a nonzero value at degree " + std::to_string(cutoff - 1);
        return result;
      }
      if (!got.tail || got.tail->stable_value != 0) {
        result.detail += "; expected a certified zero tail";
        return result;
      }
      result.pass = true;
      return result;
    };
    corpus.push_back(std::move(fixture));
  }

  {
    Fixture fixture;
    fixture.id = "3para.strata";
    fixture.provenance = "golden";
    fixture.summary = "stratification of the three-parameter sextic family";
    fixture.run = run_three_para_fixture;
    corpus.push_back(std::move(fixture));
  }

  corpus.push_back(series_fixture("ex3A1.X.M", "derived",
                                  "Jacobian series of the three-node quartic",
                                  kThreeNodesX, 0, {1, 3, 6, 7, 6, 3, 3, 3}, {6, 3}, true));
  corpus.push_back(series_fixture("ex3A1.Y.M", "golden",
                                  "Jacobian series of the quartic with three collinear nodes",
                                  kThreeNodesY, 0, {1, 3, 6, 7, 6, 4, 3, 3}, {6, 3}));

  {
    Fixture fixture;
    fixture.id = "fermat.link.d6";
    fixture.provenance = "golden";
    fixture.summary = "order-1 series of the smooth sextic against the degree-5 Jacobian series";
    fixture.run = []() {
      const HilbertSeq h1 = hessian_algebra_series(form3(kFermat6), 1);
      const HilbertSeq m5 = milnor_series(form3(kFermat5));
      const size_t len = std::max(h1.coeffs.size(), m5.coeffs.size());
      FixtureResult result;
      result.detail = "order-1: " + fmt_series(h1) + " | degree-5 Jacobian: " + fmt_series(m5);
      result.pass = h1.extended(len) == m5.extended(len);
      if (!result.pass) result.detail += "; expected the two series to agree";
      return result;
    };
    corpus.push_back(std::move(fixture));
  }

  return corpus;
}

} // namespace

const std::vector<Fixture>& fixture_corpus() {
  static const std::vector<Fixture> corpus = build_corpus();
  return corpus;
}

const Fixture& load_fixture(const std::string& id) {
  if (id.empty()) fail(Errc::corrupt_fixture, "fixture id must not be empty");
  for (const auto& fixture : fixture_corpus())
    if (fixture.id == id) return fixture;
  fail(Errc::corrupt_fixture, "no fixture named " + id);
}

FixtureOutcome run_fixture(const Fixture& fixture) {
  FixtureOutcome outcome;
  outcome.id = fixture.id;
  outcome.provenance = fixture.provenance;
  try {
    const FixtureResult result = fixture.run();
    outcome.pass = result.pass;
    outcome.detail = result.detail;
  } catch (const Error& e) {
    outcome.pass = false;
    outcome.detail = std::string(e.code_name()) + ": " + e.what();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("unexpected failure: ") + e.what();
  }
  return outcome;
}

std::vector<FixtureOutcome> run_fixtures(const std::string& prefix) {
  std::vector<FixtureOutcome> outcomes;
  for (const auto& fixture : fixture_corpus()) {
    if (!prefix.empty() && fixture.id.rfind(prefix, 0) != 0) continue;
    outcomes.push_back(run_fixture(fixture));
  }
  if (outcomes.empty())
    fail(Errc::corrupt_fixture, prefix.empty() ? "the fixture corpus is empty"
                                               : "no fixture id starts with " + prefix);
  return outcomes;
}

} // namespace hessalg
