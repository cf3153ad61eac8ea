#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acbm/fixtures.hpp"

using namespace acbm;

namespace {

bool mentions(const std::vector<std::string> &v, const std::string &needle) {
  for (const auto &s : v)
    if (s.find(needle) != std::string::npos)
      return true;
  return false;
}

} // namespace

TEST_CASE("the family carries a valid almost contact B-metric structure") {
  const auto f = fixtures::paper_family();
  const ValidationReport rep = validate_structure(f.alg, f.s);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
  CHECK_NOTHROW(require_valid(f.alg, f.s));
}

TEST_CASE("structure relations hold by direct computation") {
  const auto s = fixtures::paper_family().s;
  const std::size_t n = 5;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = basis_vector(n, i);
    // φ²x = -x + η(x)ξ
    CHECK(s.phi_of(s.phi_of(e)) == add(scale(Scalar(-1), e), scale(s.eta_of(e), s.xi)));
    CHECK(s.eta_of(s.phi_of(e)).is_zero());
    for (std::size_t j = 0; j < n; ++j) {
      const Vector f = basis_vector(n, j);
      CHECK(s.metric(s.phi_of(e), s.phi_of(f)) ==
            -s.metric(e, f) + s.eta_of(e) * s.eta_of(f));
    }
  }
  CHECK(is_zero(s.phi_of(s.xi)));
  CHECK(s.eta_of(s.xi) == Scalar(1));
}

TEST_CASE("a perturbed metric fails validation with the violated relation") {
  const auto f = fixtures::flipped_metric();
  const ValidationReport rep = validate_structure(f.alg, f.s);
  CHECK_FALSE(rep.ok);
  CHECK(mentions(rep.violations, "g(phi x, phi y)"));
  CHECK(mentions(rep.violations, "signature"));
  CHECK_THROWS_AS(require_valid(f.alg, f.s), ValidationError);
}

TEST_CASE("degenerate metrics are rejected") {
  auto s = fixtures::paper_family().s;
  Matrix g = s.g;
  g[4][4] = Scalar();
  CHECK_THROWS_AS(make_structure(s.phi, s.xi, s.eta, g), ValidationError);
}

TEST_CASE("broken structure relations are reported") {
  auto s = fixtures::paper_family().s;
  Matrix phi = s.phi;
  phi[0][4] = Scalar(1); // φξ = E1
  const auto bad = make_structure(phi, s.xi, s.eta, s.g);
  const ValidationReport rep = validate_structure(fixtures::paper_family().alg, bad);
  CHECK_FALSE(rep.ok);
  CHECK(mentions(rep.violations, "phi xi"));
}

TEST_CASE("metrics whose inverse is not polynomial are rejected") {
  const auto P = make_param_space({"t"});
  const Scalar t = Scalar::variable(P, "t");
  auto s = fixtures::paper_family().s;
  Matrix g = s.g;
  // Scaling the horizontal part by t^2 + 1 keeps the B-metric relation but
  // the inverse needs 1/(t^2 + 1).
  for (std::size_t i = 0; i < 4; ++i)
    g[i][i] = g[i][i] * (t * t + Scalar(1));
  REQUIRE_THROWS(make_structure(s.phi, s.xi, s.eta, g));
}

TEST_CASE("associated metric is again a B-metric") {
  const auto s = fixtures::paper_family().s;
  const Matrix gt = associated_metric(s);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(gt[i][j] == gt[j][i]);
      const Vector pi = s.phi_of(basis_vector(5, i)), pj = s.phi_of(basis_vector(5, j));
      CHECK(bilinear(gt, pi, pj) == -gt[i][j] + s.eta[i] * s.eta[j]);
    }
  CHECK(gt[0][2] == Scalar(-1)); // g(E1, φE3) = g(E1, -E1)
}

TEST_CASE("horizontal and vertical projectors") {
  const auto s = fixtures::paper_family().s;
  for (std::size_t i = 0; i < 5; ++i) {
    const Vector e = basis_vector(5, i);
    CHECK(add(project_h(s, e), project_v(s, e)) == e);
  }
  CHECK(is_zero(project_h(s, s.xi)));
  CHECK(project_v(s, s.xi) == s.xi);
}

TEST_CASE("index raising inverts lowering") {
  const auto s = fixtures::paper_family().s;
  const Vector x = {Scalar(1), Scalar(-2), Scalar(3), Scalar(0), Scalar(5)};
  CHECK(s.raise(s.lower(x)) == x);
  CHECK(s.lower(s.xi) == s.eta);
}
