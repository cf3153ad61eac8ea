#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acbm/fixtures.hpp"
#include "acbm/verify.hpp"

#include <set>
#include <sstream>

using namespace acbm;

namespace {

std::string machine_report(const std::vector<CheckResult> &r) {
  std::ostringstream os;
  print_report(os, r, ReportFormat::machine);
  return os.str();
}

const CheckResult *find(const std::vector<CheckResult> &rs, const std::string &name) {
  for (const auto &r : rs)
    if (r.name == name)
      return &r;
  return nullptr;
}

} // namespace

TEST_CASE("symbolic family report") {
  const auto f = fixtures::paper_family();
  const auto results = run_suite(f.alg, f.s);
  std::vector<std::string> failed;
  for (const auto &r : results)
    if (r.status == Status::fail)
      failed.push_back(r.name);
  // The Nijenhuis form of the torsion gives 3T/2 on this class.
  CHECK(failed == std::vector<std::string>{"phikt.torsion_nijenhuis_form"});
  REQUIRE(find(results, "family.riemann_table"));
  CHECK(find(results, "family.riemann_table")->status == Status::pass);
  CHECK(find(results, "curvature.KRDT")->status == Status::hypothesis_not_met);
  const CheckResult *t = find(results, "family.torsion_components");
  REQUIRE(t);
  CHECK(t->status == Status::pass);
  CHECK_FALSE(t->note.empty());
}

TEST_CASE("check names are unique and every failure has a witness") {
  for (const auto &name : {"family", "fix-c", "einstein", "abelian", "non-killing"}) {
    const auto f = *fixtures::fixture_by_name(name);
    const auto results = run_suite(f.alg, f.s);
    std::set<std::string> names;
    for (const auto &r : results) {
      CHECK(names.insert(r.name).second);
      CHECK_FALSE(r.anchor.empty());
      if (r.status == Status::fail) {
        REQUIRE(r.witness);
        CHECK(r.witness->lhs != r.witness->rhs);
      }
    }
  }
}

TEST_CASE("abelian fixture passes everything") {
  const auto f = fixtures::abelian_fixture();
  const auto results = run_suite(f.alg, f.s);
  for (const auto &r : results) {
    INFO(r.name);
    CHECK(r.status == Status::pass);
  }
  CHECK_FALSE(any_failed(results));
}

TEST_CASE("inputs outside the class report not applicable") {
  const auto f = fixtures::non_killing();
  const auto results = run_suite(f.alg, f.s);
  CHECK_FALSE(any_failed(results));
  const CheckResult *r = find(results, "phikt.Q_phi");
  REQUIRE(r);
  CHECK(r->status == Status::not_applicable);
  CHECK(r->note == "φKT-connection does not exist");
}

TEST_CASE("invalid input is rejected before any check runs") {
  const auto f = fixtures::flipped_metric();
  CHECK_THROWS_AS(run_suite(f.alg, f.s), ValidationError);
  const auto j = fixtures::non_jacobi();
  CHECK_THROWS_AS(run_suite(j.alg, j.s), ValidationError);
}

TEST_CASE("runs are deterministic") {
  const auto f = fixtures::paper_family();
  CHECK(machine_report(run_suite(f.alg, f.s)) == machine_report(run_suite(f.alg, f.s)));
}

TEST_CASE("machine line format") {
  CheckResult r;
  r.name = "x.y";
  r.status = Status::fail;
  r.anchor = "a = b";
  r.witness = Witness{{0, 1, 4}, Scalar(-3), Scalar(Rational(-2, 3))};
  CHECK(machine_line(r) == "CHECK x.y fail witness=(1,2,5) lhs=-3 rhs=-2/3 anchor=\"a = b\"");
  r.status = Status::pass;
  r.witness.reset();
  CHECK(machine_line(r) == "CHECK x.y pass anchor=\"a = b\"");
}

TEST_CASE("family detection") {
  const auto f = fixtures::paper_family();
  CHECK(is_paper_family(f.alg, f.s));
  const auto c = fixtures::fix_c();
  CHECK_FALSE(is_paper_family(c.alg, c.s));
  SuiteOptions o;
  o.family_checks = false;
  CHECK_FALSE(find(run_suite(f.alg, f.s, o), "family.riemann_table"));
}
