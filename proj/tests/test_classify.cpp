#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acbm/classify.hpp"
#include "acbm/fixtures.hpp"

using namespace acbm;

namespace {

struct Setup {
  fixtures::Fixture f;
  Connection nabla;
  Tensor F;
  explicit Setup(fixtures::Fixture fx)
      : f(std::move(fx)), nabla(levi_civita(f.alg, f.s)),
        F(fundamental_F(f.s, nabla)) {}
  ClassMembership classes() const { return class_membership(F, f.s, nabla); }
};

// [φ,φ](x,y) + dη(x,y)ξ written out with brackets only.
Vector nijenhuis_vector(const fixtures::Fixture &f, const Vector &x, const Vector &y) {
  const auto &s = f.s;
  auto br = [&](const Vector &a, const Vector &b) { return bracket(f.alg, a, b); };
  const Vector px = s.phi_of(x), py = s.phi_of(y);
  Vector v = br(px, py);
  v = add(v, s.phi_of(s.phi_of(br(x, y))));
  v = sub(v, s.phi_of(br(px, y)));
  v = sub(v, s.phi_of(br(x, py)));
  return add(v, scale(-s.eta_of(br(x, y)), s.xi));
}

} // namespace

TEST_CASE("the family is in F7 and not in F3") {
  const Setup S(fixtures::paper_family());
  const auto c = S.classes();
  CHECK(c.F7);
  CHECK_FALSE(c.F3);
  CHECK_FALSE(c.F0);
  CHECK(c.F3plusF7);
  CHECK(most_specific_class(c) == "F7");
  CHECK(F_symmetry_check(S.F, S.f.s));
  CHECK(F7_condition_check(S.F, S.f.s));
}

TEST_CASE("the abelian fixture is in F0") {
  const Setup S(fixtures::abelian_fixture());
  CHECK(S.F.is_zero());
  CHECK(most_specific_class(S.classes()) == "F0");
}

TEST_CASE("specializations with vanishing mu are F0") {
  CHECK(most_specific_class(Setup(fixtures::paper_family({1, 0, 0, 0, 0, 0})).classes()) == "F0");
  CHECK(most_specific_class(Setup(fixtures::fix_c()).classes()) == "F7");
}

TEST_CASE("an input with non-Killing xi is outside F3+F7") {
  const Setup S(fixtures::non_killing());
  CHECK(most_specific_class(S.classes()) == "none");
  CHECK_THROWS_WITH_AS(require_F3plusF7(S.F, S.f.s, S.nabla),
                       "φKT-connection does not exist", ClassGateError);
}

TEST_CASE("both Nijenhuis routes agree with a bracket oracle") {
  for (const auto &fx : {fixtures::paper_family(), fixtures::fix_c(),
                         fixtures::non_killing(), fixtures::broken_non_abelian()}) {
    const Setup S(fx);
    const Tensor viaF = nijenhuis(S.F, S.f.s);
    const Tensor viaBracket = nijenhuis_bracket(S.f.alg, S.f.s);
    CHECK(compare(viaF, viaBracket));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        const Vector v = nijenhuis_vector(fx, basis_vector(5, i), basis_vector(5, j));
        for (std::size_t k = 0; k < 5; ++k)
          CHECK(viaBracket(i, j, k) == S.f.s.metric(v, basis_vector(5, k)));
      }
  }
}

TEST_CASE("Nijenhuis component at a specialization") {
  const Setup S(fixtures::fix_c());
  CHECK(nijenhuis(S.F, S.f.s)(0, 1, 4) == Scalar(-4));
}

TEST_CASE("Nijenhuis forms on the vertical class") {
  const Setup S(fixtures::paper_family());
  const NijenhuisForms forms = nijenhuis_forms(S.f.s, S.nabla);
  const Tensor N = nijenhuis(S.F, S.f.s);
  CHECK(compare(forms.full, N));
  CHECK(compare(forms.vertical, N));
  const auto [h, v] = nijenhuis_hv_split(N, S.f.s);
  CHECK(h.is_zero());
  CHECK(compare(v, N));
}

TEST_CASE("bracket conditions for non-Abelian structures") {
  const Setup S(fixtures::paper_family());
  const LieClassConditions c = lie_class_conditions(S.f.alg, S.f.s);
  CHECK(c.F7);
  CHECK_FALSE(c.F3);
  CHECK_FALSE(c.F0);
  CHECK(two_F_bracket_check(S.f.alg, S.f.s, S.F));
  const auto broken = fixtures::broken_non_abelian();
  CHECK_THROWS_AS(lie_class_conditions(broken.alg, broken.s), ClassGateError);
}

TEST_CASE("isotropic F0 predicate") {
  CHECK(isotropic_F0_check(Scalar()));
  CHECK_FALSE(isotropic_F0_check(Scalar(-8)));
  const Setup S(fixtures::einstein_instance());
  CHECK(isotropic_F0_check(square_norm_nabla_phi(S.f.s, S.nabla)));
  CHECK_FALSE(S.F.is_zero());
}
