#ifndef HESSALG_FIXTURES_HPP
#define HESSALG_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

namespace hessalg {

struct FixtureResult {
  bool pass = false;
  std::string detail;
};

// a named regression case: inputs plus expected outputs, with a provenance
// tag saying whether the expectation is an externally reported value
// ("golden"), the output of an independent oracle ("derived"), or a
// definitional identity ("direct")
struct Fixture {
  std::string id;
  std::string provenance;
  std::string summary;
  std::function<FixtureResult()> run;
};

const std::vector<Fixture>& fixture_corpus();

// CorruptFixture when the id is empty or unknown
const Fixture& load_fixture(const std::string& id);

struct FixtureOutcome {
  std::string id;
  std::string provenance;
  bool pass = false;
  std::string detail;
};

FixtureOutcome run_fixture(const Fixture& fixture);

// run every fixture whose id starts with prefix (all of them when empty);
// CorruptFixture when the prefix matches nothing
std::vector<FixtureOutcome> run_fixtures(const std::string& prefix = "");

} // namespace hessalg

#endif
