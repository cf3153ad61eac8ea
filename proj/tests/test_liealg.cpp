#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acbm/fixtures.hpp"

#include <random>

using namespace acbm;

namespace {

Vector random_vector(std::mt19937 &rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  Vector v(n);
  for (auto &x : v)
    x = Scalar(d(rng));
  return v;
}

Vector jacobiator(const LieAlgebra &alg, const Vector &x, const Vector &y,
                  const Vector &z) {
  return add(add(bracket(alg, bracket(alg, x, y), z),
                 bracket(alg, bracket(alg, y, z), x)),
             bracket(alg, bracket(alg, z, x), y));
}

} // namespace

TEST_CASE("family brackets match their definition") {
  const auto f = fixtures::paper_family();
  const auto &P = f.alg.params();
  auto v = [&](const char *name) { return Scalar::variable(P, name); };
  const Vector b12 = f.alg.bracket_basis(0, 1);
  CHECK(b12[0] == -v("l1"));
  CHECK(b12[4] == Scalar(2) * v("m1"));
  CHECK(f.alg.bracket_basis(2, 3) == scale(Scalar(-1), b12));
  const Vector b14 = f.alg.bracket_basis(0, 3);
  CHECK(b14[2] == -v("l1"));
  CHECK(f.alg.bracket_basis(1, 2) == scale(Scalar(-1), b14));
  CHECK(f.alg.bracket_basis(3, 0) == scale(Scalar(-1), b14));
  CHECK(is_zero(f.alg.bracket_basis(0, 4)));
}

TEST_CASE("Jacobi holds for the family as a polynomial identity") {
  CHECK(jacobi_check(fixtures::paper_family().alg));
  // Independent oracle: random vectors at random specializations.
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> p;
    for (int i = 0; i < 6; ++i)
      p.emplace_back(d(rng));
    const auto f = fixtures::paper_family(p);
    CHECK(is_zero(jacobiator(f.alg, random_vector(rng, 5), random_vector(rng, 5),
                             random_vector(rng, 5))));
  }
}

TEST_CASE("Jacobi failure carries a witness") {
  const auto f = fixtures::non_jacobi();
  const CheckOutcome r = jacobi_check(f.alg);
  REQUIRE_FALSE(r);
  REQUIRE(r.witness);
  const auto &ix = r.witness->indices;
  REQUIRE(ix.size() == 4);
  const Vector j = jacobiator(f.alg, basis_vector(5, ix[0]), basis_vector(5, ix[1]),
                              basis_vector(5, ix[2]));
  CHECK(j[ix[3]] == r.witness->lhs);
  CHECK_FALSE(j[ix[3]].is_zero());
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  const auto f = fixtures::fix_c();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = random_vector(rng, 5), y = random_vector(rng, 5),
                 z = random_vector(rng, 5);
    CHECK(bracket(f.alg, x, y) == scale(Scalar(-1), bracket(f.alg, y, x)));
    CHECK(bracket(f.alg, add(x, z), y) ==
          add(bracket(f.alg, x, y), bracket(f.alg, z, y)));
  }
}

TEST_CASE("from_constants rejects non-antisymmetric tables") {
  const auto P = make_param_space({});
  std::vector<std::vector<Vector>> c(3, std::vector<Vector>(3, zero_vector(3)));
  c[0][1] = basis_vector(3, 2);
  CHECK_THROWS_AS(LieAlgebra::from_constants(3, P, c), ValidationError);
  c[1][0] = scale(Scalar(-1), basis_vector(3, 2));
  CHECK(LieAlgebra::from_constants(3, P, c).bracket_basis(0, 1) == basis_vector(3, 2));
}

TEST_CASE("non-Abelian almost contact structure") {
  const auto fam = fixtures::paper_family();
  CHECK(non_abelian_structure_check(fam.alg, fam.s));
  const auto broken = fixtures::broken_non_abelian();
  CHECK_FALSE(non_abelian_structure_check(broken.alg, broken.s));
  CHECK(fixtures::abelian_fixture().alg.is_abelian());
}

TEST_CASE("substitution specializes the structure constants") {
  const auto f = fixtures::paper_family();
  Assignment a;
  const std::vector<int> vals = {1, 0, 0, 0, 1, 0};
  for (std::size_t i = 0; i < 6; ++i)
    a[fixtures::family_param_names()[i]] = vals[i];
  const LieAlgebra s = f.alg.substitute(a);
  const LieAlgebra c = fixtures::fix_c().alg;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k)
        CHECK(s.c(i, j, k).constant_value() == c.c(i, j, k).constant_value());
}
