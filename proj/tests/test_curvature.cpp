#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acbm/curvature.hpp"
#include "acbm/fixtures.hpp"

using namespace acbm;

namespace {

// R(E_i,E_j) = [A_i, A_j] - Σ_m c(i,j,m) A_m with A_i the matrix of ∇_{E_i}.
Tensor curvature_oracle(const LieAlgebra &alg, const Connection &c,
                        const StructurePack &s) {
  const std::size_t n = alg.dim();
  std::vector<Matrix> A(n, zero_matrix(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        A[i][k][j] = c(i, j, k);
  Tensor L(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix r = multiply(A[i], A[j]);
      const Matrix ji = multiply(A[j], A[i]);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          r[a][b] -= ji[a][b];
          for (std::size_t m = 0; m < n; ++m)
            r[a][b] -= alg.c(i, j, m) * A[m][a][b];
        }
      for (std::size_t k = 0; k < n; ++k) {
        Vector col(n);
        for (std::size_t a = 0; a < n; ++a)
          col[a] = r[a][k];
        for (std::size_t l = 0; l < n; ++l)
          L(i, j, k, l) = s.metric(col, basis_vector(n, l));
      }
    }
  return L;
}

struct Setup {
  fixtures::Fixture f;
  PhiKT p;
  Tensor R, K, DT;
  explicit Setup(fixtures::Fixture fx)
      : f(std::move(fx)), p(phikt_connection(f.alg, f.s)),
        R(curvature_tensor(f.alg, p.nabla, f.s)), K(curvature_tensor(f.alg, p.D, f.s)),
        DT(covariant_derivative(p.D, p.T)) {}
  Scalar v(const char *n) const { return Scalar::variable(f.alg.params(), n); }
};

} // namespace

TEST_CASE("curvature agrees with the commutator oracle") {
  const Setup S(fixtures::paper_family());
  CHECK(compare(S.R, curvature_oracle(S.f.alg, S.p.nabla, S.f.s)));
  CHECK(compare(S.K, curvature_oracle(S.f.alg, S.p.D, S.f.s)));
  const auto nk = fixtures::non_killing();
  const Connection c = levi_civita(nk.alg, nk.s);
  CHECK(compare(curvature_tensor(nk.alg, c, nk.s), curvature_oracle(nk.alg, c, nk.s)));
}

TEST_CASE("published curvature components of the family") {
  const Setup S(fixtures::paper_family());
  const Scalar l1 = S.v("l1"), l2 = S.v("l2"), l3 = S.v("l3"), l4 = S.v("l4"),
               m1 = S.v("m1"), m2 = S.v("m2");
  const Scalar A = l1 * l1 + l2 * l2 - l3 * l3 - l4 * l4;
  const Scalar B = Scalar(2) * (l1 * l3 + l2 * l4);
  CHECK(S.R(0, 1, 0, 1) == A + Scalar(3) * m1 * m1);
  CHECK(S.R(0, 1, 2, 3) == -A - Scalar(2) * m1 * m1 + m2 * m2);
  CHECK(S.R(0, 3, 1, 2) == A + m1 * m1 - Scalar(2) * m2 * m2);
  CHECK(S.R(0, 1, 0, 3) == B + Scalar(3) * m1 * m2);
  CHECK(S.R(0, 2, 1, 3) == -(m1 * m1 + m2 * m2));
  CHECK(S.R(0, 4, 2, 4) == Scalar(-2) * m1 * m2);
  CHECK(S.R(2, 4, 2, 4) == m1 * m1 - m2 * m2);
  CHECK(S.K(0, 1, 0, 1) == A + Scalar(4) * m1 * m1);
  CHECK(S.K(0, 3, 1, 2) == A - Scalar(4) * m2 * m2);
  CHECK(S.K(0, 1, 0, 3) == B + Scalar(4) * m1 * m2);
}

TEST_CASE("curvature symmetries") {
  const Setup S(fixtures::paper_family());
  CHECK(curvature_antisymmetry_check(S.R));
  CHECK(bianchi_check(S.R));
  CHECK(curvature_antisymmetry_check(S.K));
  CHECK(phi_property_check(S.K, S.f.s));
  CHECK_FALSE(bianchi_check(S.K));
}

TEST_CASE("Ricci and scalar curvature at a specialization") {
  const Setup S(fixtures::fix_c());
  CHECK(S.R(0, 1, 0, 1) == Scalar(4));
  CHECK(S.K(0, 1, 0, 1) == Scalar(5));
  const Tensor rho = ricci(S.R, S.f.s), rhoD = ricci(S.K, S.f.s);
  // Brute-force contraction with the diagonal metric.
  Scalar tau;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      tau += S.f.s.g_inv[i][i] * S.f.s.g_inv[j][j] * S.R(j, i, i, j);
  CHECK(tau == Scalar(-12));
  CHECK(scalar_curv(rho, S.f.s) == Scalar(-12));
  CHECK(scalar_curv(rhoD, S.f.s) == Scalar(-24));
  CHECK(norm_T(S.p.T, S.f.s) == Scalar(48));
}

TEST_CASE("scalar curvature relations hold symbolically") {
  const Setup S(fixtures::paper_family());
  const Scalar tau = scalar_curv(ricci(S.R, S.f.s), S.f.s);
  const Scalar tauD = scalar_curv(ricci(S.K, S.f.s), S.f.s);
  const Scalar normT = norm_T(S.p.T, S.f.s);
  const Scalar nphi = square_norm_nabla_phi(S.f.s, S.p.nabla);
  CHECK(tdt_check(tau, tauD, normT));
  CHECK(tauD == tau + Scalar(Rational(3, 2)) * nphi);
  CHECK_FALSE(tdt_check(tau, tauD, Scalar(2) * normT));
}

TEST_CASE("torsion curvature identities") {
  for (const auto &fx : {fixtures::paper_family(), fixtures::fix_c(),
                         fixtures::einstein_instance(), fixtures::abelian_fixture()}) {
    const Setup S(fx);
    CHECK(krt_identity_check(S.R, S.K, S.DT, S.p.T, S.f.s));
    CHECK(torsion_bianchi_check(S.K, S.DT, S.p.T, S.f.s));
    CHECK(kr_dt0_check(S.R, S.K, S.p.T, S.f.s));
  }
}

TEST_CASE("phi-Kaehler type exactly when mu vanishes") {
  for (const auto &[values, expected] :
       std::vector<std::pair<std::vector<Rational>, bool>>{
           {{1, 0, 0, 0, 1, 0}, false},
           {{1, 0, 0, 0, 0, 0}, true},
           {{2, -1, 1, 3, 0, 0}, true},
           {{0, 0, 0, 0, 1, 1}, false},
           {{1, 0, 1, 0, 1, -1}, false},
           {{0, 1, 0, 0, 0, 2}, false}}) {
    const Setup S(fixtures::paper_family(values));
    const bool kaehler = bool(phi_kaehler_check(S.K, S.f.s));
    CHECK(kaehler == expected);
    CHECK(bool(kr_sT_form_check(S.R, S.K, S.p.T, S.f.s)) == kaehler);
    CHECK(bool(dtgt_check(S.DT, S.p.T, S.f.s)) == kaehler);
  }
}

TEST_CASE("D-parallel equivalences") {
  const Setup S(fixtures::paper_family());
  const auto eq = dparallel_equivalences(S.f.alg, S.DT, S.p.T, S.R, S.K, S.f.s);
  REQUIRE(eq);
  CHECK_FALSE(eq->closed_T);
  CHECK_FALSE(eq->closed_T_ce);
  CHECK_FALSE(eq->sigma_TT_zero);
  CHECK_FALSE(eq->K_form3);
  const Setup Z(fixtures::paper_family({1, 2, 0, 1, 0, 0}));
  const auto z = dparallel_equivalences(Z.f.alg, Z.DT, Z.p.T, Z.R, Z.K, Z.f.s);
  REQUIRE(z);
  CHECK(z->closed_T);
  CHECK(z->K_form3);
}

TEST_CASE("Einstein conditions") {
  const Setup S(fixtures::paper_family());
  const EinsteinResult e = einstein_check(ricci(S.R, S.f.s), S.f.s);
  CHECK_FALSE(e.einstein);
  const Scalar l1 = S.v("l1"), l2 = S.v("l2"), l3 = S.v("l3"), l4 = S.v("l4"),
               m1 = S.v("m1"), m2 = S.v("m2");
  const std::vector<Scalar> expected = vanishing_conditions(
      {m1 * m2 + l1 * l3 + l2 * l4,
       Scalar(3) * (m1 * m1 - m2 * m2) + l1 * l1 + l2 * l2 - l3 * l3 - l4 * l4});
  CHECK(e.obstructions == expected);

  const Setup E(fixtures::einstein_instance());
  const Tensor rho = ricci(E.R, E.f.s);
  const EinsteinResult ei = einstein_check(rho, E.f.s);
  CHECK(ei.einstein);
  REQUIRE(ei.constant);
  CHECK(ei.constant->is_zero());
  CHECK(rho.is_zero());
  CHECK(square_norm_nabla_phi(E.f.s, E.p.nabla).is_zero());
}

TEST_CASE("vertical and horizontal formula suites") {
  const Setup S(fixtures::paper_family());
  for (const auto &r : f7_formula_suite(S.f.alg, S.f.s, S.p.nabla, S.p.D, S.R, S.K, S.p.T)) {
    INFO(r.name);
    CHECK(r.status != Status::fail);
  }
  CHECK_THROWS_AS(f3_formula_suite(S.f.alg, S.f.s, S.p.nabla, S.p.D, S.R, S.K, S.p.T),
                  ClassGateError);
  const Setup Z(fixtures::paper_family({1, 0, 0, 0, 0, 0}));
  for (const auto &r : f7_formula_suite(Z.f.alg, Z.f.s, Z.p.nabla, Z.p.D, Z.R, Z.K, Z.p.T)) {
    INFO(r.name);
    CHECK(r.status == Status::pass);
  }
  for (const auto &r : f3_formula_suite(Z.f.alg, Z.f.s, Z.p.nabla, Z.p.D, Z.R, Z.K, Z.p.T)) {
    INFO(r.name);
    CHECK(r.status == Status::pass);
  }
}

TEST_CASE("R and torsion when K is of phi-Kaehler type") {
  const Setup Z(fixtures::paper_family({1, 2, 0, 1, 0, 0}));
  CHECK(r_torsion_check(Z.R, Z.p.T, Z.p.nabla, Z.f.s));
  const Setup S(fixtures::fix_c());
  CHECK_FALSE(r_torsion_check(S.R, S.p.T, S.p.nabla, S.f.s));
}
