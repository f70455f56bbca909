#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "qbundle/error.hpp"
#include "qbundle/examples.hpp"
#include "qbundle/expr.hpp"
#include "qbundle/suites.hpp"

using namespace qbundle;

namespace {

bool usage_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::Usage;
  }
  return false;
}

}  // namespace

TEST_CASE("flag suite with nmax 0 only checks d_{m,0}") {
  SuiteOptions o;
  o.nmax = 0;
  Report r = run_flag_suite(o);
  int d_checks = 0;
  for (const auto& c : r.checks) {
    // The printed first form of (d.act-) does not involve nmax.
    if (c.status == Status::Fail) CHECK_MESSAGE(c.id.rfind("05-identity.d_act_minus.", 0) == 0, c.id);
    if (c.id.rfind("06-d.agree.", 0) != 0 && c.id.rfind("06-d.grouplike.", 0) != 0) continue;
    ++d_checks;
    CHECK_MESSAGE(c.status == Status::Pass, c.id);
    CHECK_MESSAGE(c.id.find(".n0") != std::string::npos, c.id);
  }
  CHECK(d_checks == 5 * 3);
  CHECK(std::get<long>(r.parameters.at("nmax")) == 0);
}

TEST_CASE("a corrupted relation gives exactly one targeted failure") {
  Presentation p = builtin("CP1qs");
  p.relations[3] = parse_relation("zeta_star*zeta = (s^2 + xi)*(1 - q*xi)", p.alphabet);
  Algebra cp(p);
  const Algebra& u2 = shared_algebra("Uq2");
  Morphism m(cp, u2, Morphism::named(shared_algebra("CP1qs"), u2, "embed").images());
  Report r = run_checks("negative", morphism_checks(m, "embed.", "corrupted"));
  CHECK(r.count(Status::Fail) == 1);
  CHECK(r.count(Status::Pass) == p.relations.size() - 1);
  const CheckResult* bad = r.find("embed.03");
  REQUIRE(bad != nullptr);
  CHECK(bad->status == Status::Fail);
  CHECK_FALSE(bad->witness.empty());
}

TEST_CASE("uncertified degrees are skipped, other errors fail") {
  std::vector<CheckSpec> specs = {
      {"a", "", "", [] { return Verdict::pass(); }},
      {"b", "", "", []() -> Verdict { throw Error(ErrorKind::DegreeBoundExceeded, "degree 9"); }},
      {"c", "", "", []() -> Verdict { throw Error(ErrorKind::ZeroClass, "zero"); }},
  };
  Report r = run_checks("x", specs, 2);
  CHECK(r.find("a")->status == Status::Pass);
  CHECK(r.find("b")->status == Status::Skipped);
  CHECK(r.find("c")->status == Status::Fail);
  CHECK_FALSE(r.ok());
}

TEST_CASE("suite preconditions") {
  SuiteOptions o;
  o.degree = 2;
  CHECK(usage_error([&] { run_flag_suite(o); }));
  o.degree = 1;
  CHECK(usage_error([&] { run_twistor_suite(o); }));
  o.degree = 0;
  o.nmax = -1;
  CHECK(usage_error([&] { run_flag_suite(o); }));
  CHECK(usage_error([&] { run_suite("nonsense", SuiteOptions{}); }));
  setenv("QBUNDLE_DEGREE", "x", 1);
  CHECK(usage_error([] { default_degree("flag"); }));
  setenv("QBUNDLE_DEGREE", "5", 1);
  CHECK(default_degree("flag") == 5);
  unsetenv("QBUNDLE_DEGREE");
  CHECK(default_degree("flag") == 3);
  CHECK(default_degree("twistor") == 2);
}

TEST_CASE("reports do not depend on the number of jobs") {
  SuiteOptions a, b;
  a.jobs = 1;
  b.jobs = 3;
  CHECK(run_rewrite_suite(a).to_json() == run_rewrite_suite(b).to_json());
  CHECK(run_flag_suite(a).to_json() == run_flag_suite(b).to_json());
}
