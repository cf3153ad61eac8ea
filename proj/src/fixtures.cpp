#include "acbm/fixtures.hpp"

namespace acbm::fixtures {

namespace {

// φ, ξ, η, g shared by every fixture.
StructurePack family_structure() {
  const std::size_t n = 5;
  Matrix phi = zero_matrix(n);
  phi[2][0] = Scalar(1);  // φE1 = E3
  phi[3][1] = Scalar(1);  // φE2 = E4
  phi[0][2] = Scalar(-1); // φE3 = -E1
  phi[1][3] = Scalar(-1); // φE4 = -E2
  Matrix g = zero_matrix(n);
  const int eps[] = {1, 1, -1, -1, 1};
  for (std::size_t i = 0; i < n; ++i)
    g[i][i] = Scalar(eps[i]);
  return make_structure(phi, basis_vector(n, 4), basis_vector(n, 4), g);
}

// [E1,E2] = -[E3,E4] = -l1 E1 - l2 E2 + l3 E3 + l4 E4 + 2 m1 E5
// [E1,E4] = -[E2,E3] = -l3 E1 - l4 E2 - l1 E3 - l2 E4 + 2 m2 E5
LieAlgebra family_algebra(ParamSpacePtr space, const std::vector<Scalar> &p) {
  const Scalar &l1 = p[0], &l2 = p[1], &l3 = p[2], &l4 = p[3], &m1 = p[4],
               &m2 = p[5];
  LieAlgebra alg(5, space);
  const Vector b12 = {-l1, -l2, l3, l4, Scalar(2) * m1};
  const Vector b14 = {-l3, -l4, -l1, -l2, Scalar(2) * m2};
  alg.set_bracket(0, 1, b12);
  alg.set_bracket(2, 3, scale(Scalar(-1), b12));
  alg.set_bracket(0, 3, b14);
  alg.set_bracket(1, 2, scale(Scalar(-1), b14));
  return alg;
}

ParamSpacePtr empty_space() { return make_param_space({}); }

Fixture with_brackets(
    std::initializer_list<std::pair<std::pair<int, int>, Vector>> brackets) {
  LieAlgebra alg(5, empty_space());
  for (const auto &[ij, v] : brackets)
    alg.set_bracket(ij.first, ij.second, v);
  return {alg, family_structure()};
}

Vector e(std::size_t i) { return basis_vector(5, i); }

} // namespace

const std::vector<std::string> &family_param_names() {
  static const std::vector<std::string> names = {"l1", "l2", "l3",
                                                 "l4", "m1", "m2"};
  return names;
}

Fixture paper_family() {
  auto space = make_param_space(family_param_names());
  std::vector<Scalar> p;
  for (std::size_t i = 0; i < 6; ++i)
    p.push_back(Scalar::variable(space, i));
  return {family_algebra(space, p), family_structure()};
}

Fixture paper_family(const std::vector<Rational> &values) {
  if (values.size() != 6)
    throw std::invalid_argument("the family takes six parameter values");
  std::vector<Scalar> p(values.begin(), values.end());
  return {family_algebra(empty_space(), p), family_structure()};
}

Fixture paper_family(const Assignment &values) {
  std::vector<Rational> v;
  for (const auto &name : family_param_names()) {
    auto it = values.find(name);
    if (it == values.end())
      throw std::invalid_argument("missing parameter " + name);
    v.push_back(it->second);
  }
  return paper_family(v);
}

Fixture abelian_fixture() { return {LieAlgebra(5, empty_space()), family_structure()}; }

Fixture einstein_instance() { return paper_family({1, 0, 1, 0, 1, -1}); }

Fixture fix_c() { return paper_family({1, 0, 0, 0, 1, 0}); }

Fixture non_jacobi() {
  return with_brackets({{{0, 1}, e(2)}, {{0, 2}, e(1)}, {{1, 2}, e(1)}});
}

Fixture non_killing() { return with_brackets({{{4, 0}, e(0)}}); }

Fixture broken_non_abelian() { return with_brackets({{{0, 1}, e(4)}}); }

Fixture flipped_metric() {
  Fixture f = paper_family();
  Matrix g = f.s.g;
  g[4][4] = Scalar(-1);
  f.s = make_structure(f.s.phi, f.s.xi, f.s.eta, g);
  return f;
}

const std::vector<std::string> &fixture_names() {
  static const std::vector<std::string> names = {
      "family",      "fix-c",    "einstein",           "abelian",
      "non-jacobi",  "non-killing", "broken-non-abelian", "flipped-metric"};
  return names;
}

std::optional<Fixture> fixture_by_name(const std::string &name) {
  if (name == "family") return paper_family();
  if (name == "fix-c") return fix_c();
  if (name == "einstein") return einstein_instance();
  if (name == "abelian") return abelian_fixture();
  if (name == "non-jacobi") return non_jacobi();
  if (name == "non-killing") return non_killing();
  if (name == "broken-non-abelian") return broken_non_abelian();
  if (name == "flipped-metric") return flipped_metric();
  return std::nullopt;
}

} // namespace acbm::fixtures
