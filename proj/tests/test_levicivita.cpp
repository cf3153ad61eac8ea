#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acbm/fixtures.hpp"
#include "acbm/levicivita.hpp"

#include <random>

using namespace acbm;

namespace {

struct Family {
  fixtures::Fixture f = fixtures::paper_family();
  Scalar v(const char *name) const { return Scalar::variable(f.alg.params(), name); }
};

Vector gamma_vec(const Connection &c, std::size_t i, std::size_t j) {
  Vector v(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k)
    v[k] = c(i, j, k);
  return v;
}

// (∇_iφ)E_k = ∇_i(φE_k) - φ(∇_iE_k), straight from Γ.
Vector nabla_phi_oracle(const Connection &c, const StructurePack &s, std::size_t i,
                        std::size_t k) {
  const std::size_t n = s.dim();
  const Vector pk = s.phi_of(basis_vector(n, k));
  Vector first = zero_vector(n);
  for (std::size_t m = 0; m < n; ++m)
    if (!pk[m].is_zero())
      first = add(first, scale(pk[m], gamma_vec(c, i, m)));
  return sub(first, s.phi_of(gamma_vec(c, i, k)));
}

} // namespace

TEST_CASE("Levi-Civita connection of the family matches the published table") {
  const Family F;
  const Connection nabla = levi_civita(F.f.alg, F.f.s);
  const Scalar l1 = F.v("l1"), l2 = F.v("l2"), l3 = F.v("l3"), l4 = F.v("l4"),
               m1 = F.v("m1"), m2 = F.v("m2");
  const Scalar o;
  CHECK(gamma_vec(nabla, 0, 0) == Vector{o, l1, o, -l3, o});
  CHECK(gamma_vec(nabla, 2, 2) == Vector{o, -l1, o, l3, o});
  CHECK(gamma_vec(nabla, 0, 1) == Vector{-l1, o, l3, o, m1});
  CHECK(gamma_vec(nabla, 2, 3) == Vector{l1, o, -l3, o, -m1});
  CHECK(gamma_vec(nabla, 0, 3) == Vector{-l3, o, -l1, o, m2});
  CHECK(gamma_vec(nabla, 1, 0) == Vector{o, l2, o, -l4, -m1});
  CHECK(gamma_vec(nabla, 1, 2) == Vector{o, l4, o, l2, -m2});
  CHECK(gamma_vec(nabla, 3, 1) == Vector{-l4, o, -l2, o, o});
  CHECK(gamma_vec(nabla, 0, 4) == Vector{o, -m1, o, m2, o});
  CHECK(gamma_vec(nabla, 4, 3) == Vector{m2, o, m1, o, o});
  CHECK(is_zero(gamma_vec(nabla, 4, 4)));
}

TEST_CASE("Levi-Civita is torsion free and metric compatible") {
  // Both properties checked from Γ and the structure constants directly;
  // together they determine the connection.
  for (const auto &f : {fixtures::paper_family(), fixtures::non_killing(),
                        fixtures::broken_non_abelian()}) {
    const Connection c = levi_civita(f.alg, f.s);
    const std::size_t n = f.alg.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(c(i, j, k) - c(j, i, k) == f.alg.c(i, j, k));
          Scalar dg;
          for (std::size_t m = 0; m < n; ++m)
            dg += c(i, j, m) * f.s.g[m][k] + c(i, k, m) * f.s.g[j][m];
          CHECK(dg.is_zero());
        }
    CHECK(metric_compatibility_check(c, f.s));
    CHECK(torsion_of(f.alg, c, f.s).is_zero());
  }
}

TEST_CASE("fundamental tensor and its norm") {
  const Family F;
  const Connection nabla = levi_civita(F.f.alg, F.f.s);
  const auto &s = F.f.s;
  const Tensor Ften = fundamental_F(s, nabla);
  const std::size_t n = 5;
  Scalar norm;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector a = nabla_phi_oracle(nabla, s, i, k);
      for (std::size_t j = 0; j < n; ++j)
        CHECK(Ften(i, k, j) == s.metric(a, basis_vector(n, j)));
      // g is diagonal, so the contraction pairs i with i and k with k.
      norm += s.g_inv[i][i] * s.g_inv[k][k] * s.metric(a, a);
    }
  const Scalar m1 = F.v("m1"), m2 = F.v("m2");
  CHECK(norm == Scalar(-8) * (m1 * m1 - m2 * m2));
  CHECK(square_norm_nabla_phi(s, nabla) == norm);
  CHECK(square_norm_nabla_phi_via_xi(s, nabla) == norm);
}

TEST_CASE("nabla eta and nabla xi") {
  const Family F;
  const Connection nabla = levi_civita(F.f.alg, F.f.s);
  const Tensor a = nabla_eta(nabla, F.f.s);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(a(i, j) == F.f.s.metric(nabla_xi(nabla, F.f.s, basis_vector(5, i)),
                                    basis_vector(5, j)));
  CHECK(killing_check(F.f.s, nabla));
  const auto nk = fixtures::non_killing();
  CHECK_FALSE(killing_check(nk.s, levi_civita(nk.alg, nk.s)));
}

TEST_CASE("exterior derivative squares to zero") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  const auto f = fixtures::fix_c();
  for (int trial = 0; trial < 10; ++trial) {
    Vector v(5);
    for (auto &x : v)
      x = Scalar(d(rng));
    const Tensor a = covector(v);
    CHECK(exterior_derivative(f.alg, exterior_derivative(f.alg, a)).is_zero());
    Vector u(5);
    for (auto &x : u)
      x = Scalar(d(rng));
    const Tensor two = wedge(a, covector(u));
    CHECK(exterior_derivative(f.alg, exterior_derivative(f.alg, two)).is_zero());
  }
}

TEST_CASE("d eta is minus eta of the bracket") {
  const Family F;
  const Tensor deta = exterior_derivative(F.f.alg, eta_tensor(F.f.s));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(deta(i, j) == -F.f.s.eta_of(F.f.alg.bracket_basis(i, j)));
  CHECK(deta(0, 1) == Scalar(-2) * F.v("m1"));
}

TEST_CASE("exterior derivative rejects non-alternating input") {
  Tensor t(5, 2);
  t(0, 1) = Scalar(1);
  CHECK_THROWS_AS(exterior_derivative(fixtures::fix_c().alg, t), ValidationError);
}

TEST_CASE("covariant derivative of the metric vanishes") {
  const Family F;
  const Connection nabla = levi_civita(F.f.alg, F.f.s);
  CHECK(covariant_derivative(nabla, metric_tensor(F.f.s)).is_zero());
  CHECK_FALSE(covariant_derivative(nabla, eta_tensor(F.f.s)).is_zero());
}
