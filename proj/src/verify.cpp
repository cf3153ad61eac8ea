#include "acbm/verify.hpp"

#include "acbm/fixtures.hpp"
#include "acbm/specfile.hpp"

#include <array>
#include <functional>
#include <ostream>
#include <sstream>

namespace acbm {

namespace {

CheckResult not_applicable(std::string name, std::string anchor,
                           std::string why) {
  return gated_result(std::move(name), std::move(anchor),
                      Status::not_applicable, std::move(why));
}

CheckResult gate(std::string name, std::string anchor, bool hypothesis,
                 const std::string &why,
                 const std::function<CheckOutcome()> &check) {
  if (!hypothesis)
    return gated_result(std::move(name), std::move(anchor),
                        Status::hypothesis_not_met, why);
  return make_result(std::move(name), std::move(anchor), check());
}

CheckResult equivalence(std::string name, std::string anchor, bool left,
                        bool right, const std::string &left_text,
                        const std::string &right_text) {
  CheckResult r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.note = left_text + ": " + (left ? "true" : "false") + ", " + right_text +
           ": " + (right ? "true" : "false");
  if (left == right) {
    r.status = Status::pass;
  } else {
    r.status = Status::fail;
    r.witness = Witness{{}, Scalar(left ? 1 : 0), Scalar(right ? 1 : 0)};
  }
  return r;
}

std::string join(const std::vector<Scalar> &v) {
  std::string out;
  for (const auto &s : v)
    out += (out.empty() ? "" : ", ") + compact(s) + " = 0";
  return out.empty() ? "none" : out;
}

CheckOutcome matrix_equal(const Matrix &a, const Matrix &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j])
        return CheckOutcome::fail({{i, j}, a[i][j], b[i][j]});
  return CheckOutcome::pass();
}

Matrix matrix_of(std::size_t n, const std::function<Vector(const Vector &)> &f) {
  Matrix m = zero_matrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = f(basis_vector(n, j));
    for (std::size_t i = 0; i < n; ++i)
      m[i][j] = col[i];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Structure and Lie bracket checks

CheckOutcome associated_metric_check(const StructurePack &s) {
  const std::size_t n = s.dim();
  const Matrix gt = associated_metric(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (gt[i][j] != gt[j][i])
        return CheckOutcome::fail({{i, j}, gt[i][j], gt[j][i]});
      const Vector pi = s.phi_of(basis_vector(n, i));
      const Vector pj = s.phi_of(basis_vector(n, j));
      const Scalar lhs = bilinear(gt, pi, pj);
      const Scalar rhs = -gt[i][j] + s.eta[i] * s.eta[j];
      if (lhs != rhs)
        return CheckOutcome::fail({{i, j}, lhs, rhs});
    }
  return CheckOutcome::pass();
}

CheckOutcome projector_check(const StructurePack &s) {
  const std::size_t n = s.dim();
  const Matrix h = matrix_of(n, [&](const Vector &x) { return project_h(s, x); });
  const Matrix v = matrix_of(n, [&](const Vector &x) { return project_v(s, x); });
  Matrix sum = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sum[i][j] = h[i][j] + v[i][j];
  return all_of({matrix_equal(sum, identity_matrix(n)),
                 matrix_equal(multiply(h, h), h),
                 matrix_equal(multiply(v, v), v),
                 matrix_equal(multiply(h, v), zero_matrix(n))});
}

// (L_ξ g)(x,y) = -g([ξ,x],y) - g(x,[ξ,y])
bool lie_derivative_metric_zero(const LieAlgebra &alg, const StructurePack &s) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = basis_vector(n, i), ej = basis_vector(n, j);
      const Scalar v = -s.metric(bracket(alg, s.xi, ei), ej) -
                       s.metric(ei, bracket(alg, s.xi, ej));
      if (!v.is_zero())
        return false;
    }
  return true;
}

CheckOutcome nabla_eta_check(const StructurePack &s, const Connection &nabla) {
  const std::size_t n = s.dim();
  const Tensor a = nabla_eta(nabla, s);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector nx = nabla_xi(nabla, s, basis_vector(n, i));
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar rhs = s.metric(nx, basis_vector(n, j));
      if (a(i, j) != rhs)
        return CheckOutcome::fail({{i, j}, a(i, j), rhs});
    }
  }
  return CheckOutcome::pass();
}

// ---------------------------------------------------------------------------
// Tables of the five-dimensional family

const std::string kA = "(l1^2 + l2^2 - l3^2 - l4^2)";
const std::string kB = "(l1*l3 + l2*l4)";
const std::string kM = "(m1^2 - m2^2)";

struct ConnectionLine {
  int i, j;     // ∇_{E_i}E_j, 1-based
  int i2, j2;   // second entry on the same line, 0 when absent
  int sign2;
  std::string value;
};

const std::vector<ConnectionLine> &levi_civita_table() {
  static const std::vector<ConnectionLine> t = {
      {1, 1, 3, 3, -1, "l1*e2 - l3*e4"},
      {1, 2, 3, 4, -1, "-l1*e1 + l3*e3 + m1*e5"},
      {1, 3, 3, 1, 1, "l3*e2 + l1*e4"},
      {1, 4, 3, 2, 1, "-l3*e1 - l1*e3 + m2*e5"},
      {2, 1, 4, 3, -1, "l2*e2 - l4*e4 - m1*e5"},
      {2, 2, 4, 4, -1, "-l2*e1 + l4*e3"},
      {2, 3, 4, 1, 1, "l4*e2 + l2*e4 - m2*e5"},
      {2, 4, 4, 2, 1, "-l4*e1 - l2*e3"},
      {1, 5, 5, 1, 1, "-m1*e2 + m2*e4"},
      {2, 5, 5, 2, 1, "m1*e1 - m2*e3"},
      {3, 5, 5, 3, 1, "-m2*e2 - m1*e4"},
      {4, 5, 5, 4, 1, "m2*e1 + m1*e3"},
  };
  return t;
}

const std::vector<ConnectionLine> &phikt_table() {
  static const std::vector<ConnectionLine> t = {
      {1, 1, 3, 3, -1, "l1*e2 - l3*e4"},
      {1, 2, 3, 4, -1, "-l1*e1 + l3*e3"},
      {1, 3, 3, 1, 1, "l3*e2 + l1*e4"},
      {1, 4, 3, 2, 1, "-l3*e1 - l1*e3"},
      {2, 1, 4, 3, -1, "l2*e2 - l4*e4"},
      {2, 2, 4, 4, -1, "-l2*e1 + l4*e3"},
      {2, 3, 4, 1, 1, "l4*e2 + l2*e4"},
      {2, 4, 4, 2, 1, "-l4*e1 - l2*e3"},
      {5, 1, 0, 0, 0, "-2*m1*e2 + 2*m2*e4"},
      {5, 2, 0, 0, 0, "2*m1*e1 - 2*m2*e3"},
      {5, 3, 0, 0, 0, "-2*m2*e2 - 2*m1*e4"},
      {5, 4, 0, 0, 0, "2*m2*e1 + 2*m1*e3"},
  };
  return t;
}

Tensor expected_connection(const std::vector<ConnectionLine> &table,
                           const ParamSpacePtr &params) {
  const std::size_t n = 5;
  Tensor gamma(n, 3);
  for (const auto &line : table) {
    const Vector v = parse_linear_combination(line.value, params, n);
    for (std::size_t k = 0; k < n; ++k) {
      gamma(line.i - 1, line.j - 1, k) = v[k];
      if (line.i2 > 0)
        gamma(line.i2 - 1, line.j2 - 1, k) = Scalar(line.sign2) * v[k];
    }
  }
  return gamma;
}

struct CurvatureLine {
  std::vector<std::pair<int, std::array<int, 4>>> entries; // sign, indices
  std::string value;
};

const std::vector<CurvatureLine> &riemann_table() {
  static const std::vector<CurvatureLine> t = {
      {{{1, {1, 2, 1, 2}}, {1, {3, 4, 3, 4}}}, kA + " + 3*m1^2"},
      {{{1, {1, 2, 3, 4}}, {1, {3, 4, 1, 2}}}, "-" + kA + " - 2*m1^2 + m2^2"},
      {{{1, {1, 4, 1, 4}}, {1, {2, 3, 2, 3}}}, "-" + kA + " + 3*m2^2"},
      {{{1, {1, 4, 2, 3}}, {1, {2, 3, 1, 4}}}, kA + " + m1^2 - 2*m2^2"},
      {{{1, {1, 2, 1, 4}},
        {-1, {1, 2, 2, 3}},
        {-1, {2, 3, 1, 2}},
        {1, {2, 3, 3, 4}},
        {1, {1, 4, 1, 2}},
        {-1, {1, 4, 3, 4}},
        {-1, {3, 4, 1, 4}},
        {1, {3, 4, 2, 3}}},
       "2*" + kB + " + 3*m1*m2"},
      {{{1, {1, 3, 2, 4}}, {1, {2, 4, 1, 3}}}, "-(m1^2 + m2^2)"},
      {{{1, {1, 5, 3, 5}}, {1, {2, 5, 4, 5}}}, "-2*m1*m2"},
      {{{1, {1, 5, 1, 5}}, {1, {2, 5, 2, 5}}, {-1, {3, 5, 3, 5}}, {-1, {4, 5, 4, 5}}},
       "-m1^2 + m2^2"},
  };
  return t;
}

const std::vector<CurvatureLine> &phikt_curvature_table() {
  static const std::vector<CurvatureLine> t = {
      {{{1, {1, 2, 1, 2}}, {-1, {1, 2, 3, 4}}, {-1, {3, 4, 1, 2}}, {1, {3, 4, 3, 4}}},
       kA + " + 4*m1^2"},
      {{{1, {1, 4, 1, 4}}, {-1, {1, 4, 2, 3}}, {-1, {2, 3, 1, 4}}, {1, {2, 3, 2, 3}}},
       "-" + kA + " + 4*m2^2"},
      {{{1, {1, 2, 1, 4}},
        {-1, {1, 2, 2, 3}},
        {-1, {2, 3, 1, 2}},
        {1, {2, 3, 3, 4}},
        {1, {1, 4, 1, 2}},
        {-1, {1, 4, 3, 4}},
        {-1, {3, 4, 1, 4}},
        {1, {3, 4, 2, 3}}},
       "2*" + kB + " + 4*m1*m2"},
  };
  return t;
}

// Listed components completed by L(x,y,z,w) = -L(y,x,z,w) = -L(x,y,w,z) =
// L(z,w,x,y); everything else is zero.
Tensor expected_curvature(const std::vector<CurvatureLine> &table,
                          const ParamSpacePtr &params) {
  const std::size_t n = 5;
  Tensor L(n, 4);
  std::vector<bool> set(L.size(), false);
  auto put = [&](std::array<std::size_t, 4> ix, const Scalar &v) {
    const std::size_t flat = ((ix[0] * n + ix[1]) * n + ix[2]) * n + ix[3];
    if (set[flat] && L.at(ix) != v)
      throw std::logic_error("inconsistent curvature table");
    set[flat] = true;
    L.at(ix) = v;
  };
  for (const auto &line : table) {
    const Scalar value = parse_expr(line.value, params);
    for (const auto &[sign, idx] : line.entries) {
      const std::size_t a = idx[0] - 1, b = idx[1] - 1, c = idx[2] - 1,
                        d = idx[3] - 1;
      const Scalar v = Scalar(sign) * value;
      for (const auto &[x, y, z, w] :
           {std::array{a, b, c, d}, std::array{c, d, a, b}}) {
        put({x, y, z, w}, v);
        put({y, x, z, w}, -v);
        put({x, y, w, z}, -v);
        put({y, x, w, z}, v);
      }
    }
  }
  return L;
}

struct RicciLine {
  std::vector<std::pair<int, std::array<int, 2>>> entries;
  std::string value;
};

Tensor expected_ricci(const std::vector<RicciLine> &table,
                      const ParamSpacePtr &params) {
  Tensor r(5, 2);
  for (const auto &line : table) {
    const Scalar value = parse_expr(line.value, params);
    for (const auto &[sign, idx] : line.entries) {
      r(idx[0] - 1, idx[1] - 1) = Scalar(sign) * value;
      r(idx[1] - 1, idx[0] - 1) = Scalar(sign) * value;
    }
  }
  return r;
}

const std::vector<RicciLine> &ricci_table() {
  static const std::vector<RicciLine> t = {
      {{{1, {1, 1}}, {1, {2, 2}}, {-1, {3, 3}}, {-1, {4, 4}}},
       "-2*" + kA + " - 2*" + kM},
      {{{1, {1, 3}}, {1, {2, 4}}}, "-4*" + kB + " - 4*m1*m2"},
      {{{1, {5, 5}}}, "4*" + kM},
  };
  return t;
}

const std::vector<RicciLine> &phikt_ricci_table() {
  static const std::vector<RicciLine> t = {
      {{{1, {1, 1}}, {1, {2, 2}}, {-1, {3, 3}}, {-1, {4, 4}}},
       "-2*" + kA + " - 4*" + kM},
      {{{1, {1, 3}}, {1, {2, 4}}}, "-4*" + kB + " - 8*m1*m2"},
  };
  return t;
}

// Decides whether the real common zero set of `conditions` (monic, as from
// vanishing_conditions) is exactly m1 = m2 = 0.
bool zero_locus_is_mu_zero(const std::vector<Scalar> &conditions,
                           const ParamSpacePtr &params) {
  const Scalar m1 = Scalar::variable(params, "m1");
  const Scalar m2 = Scalar::variable(params, "m2");
  const Assignment at_zero{{"m1", 0}, {"m2", 0}};
  bool forces_m1 = false, forces_m2 = false, forces_both = false;
  for (const auto &c : conditions) {
    if (!c.substitute(at_zero).is_zero())
      return false;
    const auto occ = c.occurring_params();
    const bool only_mu = std::all_of(occ.begin(), occ.end(), [](const auto &p) {
      return p == "m1" || p == "m2";
    });
    if (!only_mu)
      continue;
    if (occ == std::vector<std::string>{"m1"} && c.terms().size() == 1)
      forces_m1 = true;
    if (occ == std::vector<std::string>{"m2"} && c.terms().size() == 1)
      forces_m2 = true;
    if (c.degree() == 2 && occ.size() == 2) {
      // a m1^2 + b m1 m2 + d m2^2 positive definite
      const Scalar a = c.eval({{"m1", 1}, {"m2", 0}});
      const Scalar d = c.eval({{"m1", 0}, {"m2", 1}});
      const Scalar b = c.eval({{"m1", 1}, {"m2", 1}}) - a - d;
      const Rational ra = a.constant_value(), rb = b.constant_value(),
                     rd = d.constant_value();
      const bool homogeneous = c == a * m1 * m1 + b * m1 * m2 + d * m2 * m2;
      if (homogeneous && ra > 0 && 4 * ra * rd - rb * rb > 0)
        forces_both = true;
    }
  }
  return forces_both || (forces_m1 && forces_m2);
}

CheckResult mu_locus_result(std::string name, std::string anchor,
                            const std::vector<Scalar> &values,
                            const ParamSpacePtr &params,
                            const std::string &what) {
  const auto conds = vanishing_conditions(values);
  CheckResult r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.note = what + " exactly when " + join(conds);
  if (zero_locus_is_mu_zero(conds, params)) {
    r.status = Status::pass;
  } else {
    r.status = Status::fail;
    r.witness = Witness{{}, conds.empty() ? Scalar() : conds.front(),
                        Scalar::variable(params, "m1")};
  }
  return r;
}

CheckResult same_conditions(std::string name, std::string anchor,
                            const std::vector<std::vector<Scalar>> &sets,
                            const std::vector<Scalar> &expected) {
  const auto want = vanishing_conditions(expected);
  for (const auto &set : sets) {
    const auto got = vanishing_conditions(set);
    if (got != want)
      return make_result(std::move(name), std::move(anchor),
                         CheckOutcome::fail({{},
                                             got.empty() ? Scalar() : got.front(),
                                             want.empty() ? Scalar() : want.front()}),
                         "conditions: " + join(got));
  }
  return make_result(std::move(name), std::move(anchor), CheckOutcome::pass(),
                     "conditions: " + join(want));
}

std::vector<Scalar> kaehler_defects(const Tensor &K, const StructurePack &s) {
  std::vector<Scalar> out;
  const Tensor Kphi = apply_slot(apply_slot(K, 2, s.phi), 3, s.phi);
  const Tensor S = cyclic_sum3(K);
  for (std::size_t i = 0; i < K.size(); ++i) {
    const auto ix = K.unflatten(i);
    const auto x = ix[0], y = ix[1], z = ix[2], w = ix[3];
    out.push_back(Kphi(x, y, z, w) + K(x, y, z, w));
    out.push_back(K(x, y, z, w) + K(y, x, z, w));
    out.push_back(K(x, y, z, w) + K(x, y, w, z));
    out.push_back(S(x, y, z, w));
  }
  return out;
}

void family_checks(const LieAlgebra &alg, const StructurePack &s,
                   const Analysis &a, std::vector<CheckResult> &out) {
  const ParamSpacePtr &P = alg.params();
  auto expr = [&](const std::string &t) { return parse_expr(t, P); };

  out.push_back(make_result("family.levi_civita_table",
                            "∇_{E_i}E_j table of the family",
                            compare(a.nabla.gamma,
                                    expected_connection(levi_civita_table(), P))));
  out.push_back(a.D ? make_result("family.phikt_table",
                                  "D_{E_i}E_j table of the family",
                                  compare(a.D->gamma,
                                          expected_connection(phikt_table(), P)))
                    : not_applicable("family.phikt_table",
                                     "D_{E_i}E_j table of the family",
                                     a.phikt_error));
  out.push_back(make_result("family.riemann_table",
                            "R_ijkl of the family (completed by symmetries)",
                            all_of({compare(a.R, expected_curvature(riemann_table(), P)),
                                    bianchi_check(expected_curvature(riemann_table(), P))})));
  if (a.K) {
    out.push_back(make_result(
        "family.phikt_curvature_table", "K_ijkl of the family",
        compare(*a.K, expected_curvature(phikt_curvature_table(), P))));
    out.push_back(make_result("family.ricci_tables", "ρ_ij and ρ^D_ij of the family",
                              all_of({compare(a.rho, expected_ricci(ricci_table(), P)),
                                      compare(*a.rhoD,
                                              expected_ricci(phikt_ricci_table(), P))})));
    out.push_back(make_result(
        "family.scalar_curvatures", "τ = -8A - 4M, τ^D = -8A - 16M",
        all_of({expect_equal(a.tau, expr("-8*" + kA + " - 4*" + kM)),
                expect_equal(*a.tauD, expr("-8*" + kA + " - 16*" + kM))})));
  }
  out.push_back(make_result("family.norm_nabla_phi", "‖∇φ‖² = -8(m1² - m2²)",
                            expect_equal(a.norm_nabla_phi, expr("-8*" + kM))));

  out.push_back(make_result(
      "family.class_F7", "the family belongs to F₇",
      expect_equal(Scalar(a.classes.F7 ? 1 : 0), Scalar(1)),
      "class: " + most_specific_class(a.classes)));
  out.push_back(mu_locus_result("family.F0_iff_mu_zero", "F = 0 ⇔ m1 = m2 = 0",
                                a.F.comps(), P, "F = 0"));
  if (!a.T || !a.DT || !a.K)
    return;
  out.push_back(make_result("family.parallel_torsion", "D T = 0",
                            compare(*a.DT, Tensor(alg.dim(), 4))));
  out.push_back(mu_locus_result("family.kaehler_iff_mu_zero",
                                "K φ-Kähler ⇔ m1 = m2 = 0",
                                kaehler_defects(*a.K, s), P,
                                "K is of φ-Kähler type"));
  {
    const Scalar m1 = expr("m1"), m2 = expr("m2");
    Tensor expected(5, 3);
    auto put = [&](std::size_t x, std::size_t y, std::size_t z, const Scalar &v) {
      for (const auto &[p, q, r, sg] :
           {std::tuple{x, y, z, 1}, std::tuple{y, z, x, 1}, std::tuple{z, x, y, 1},
            std::tuple{y, x, z, -1}, std::tuple{x, z, y, -1}, std::tuple{z, y, x, -1}})
        expected(p, q, r) = Scalar(sg) * v;
    };
    put(0, 1, 4, Scalar(-2) * m1);
    put(2, 3, 4, Scalar(2) * m1);
    put(1, 2, 4, Scalar(2) * m2);
    put(3, 0, 4, Scalar(2) * m2);
    out.push_back(make_result(
        "family.torsion_components",
        "T(E1,E2,E5) = -T(E3,E4,E5), T(E2,E3,E5) = T(E4,E1,E5)",
        compare(*a.T, expected),
        "T(E1,E2,E5) = -2*m1 as forced by T = 2(D - ∇); a value of +2*m1 "
        "would contradict the D table"));
  }
  {
    std::vector<Scalar> iso_xi;
    for (std::size_t i = 0; i < 4; ++i) {
      const Vector v = nabla_xi(a.nabla, s, basis_vector(5, i));
      iso_xi.push_back(s.metric(v, v));
    }
    out.push_back(same_conditions(
        "family.isotropic_equivalences",
        "‖∇φ‖² = 0 ⇔ τ = τ^D ⇔ ∇_{E_i}ξ isotropic ⇔ m1 = ±m2",
        {{a.norm_nabla_phi}, {a.tau - *a.tauD}, iso_xi}, {expr(kM)}));
  }
  {
    const EinsteinResult e = einstein_check(a.rho, s);
    const std::vector<Scalar> expected = {expr("m1*m2 + " + kB),
                                          expr(kM + " + 1/3*" + kA)};
    out.push_back(same_conditions(
        "family.einstein_conditions",
        "Einstein ⇔ m1 m2 = -(l1 l3 + l2 l4), m1² - m2² = -A/3",
        {e.obstructions}, expected));
  }
  {
    const Tensor dT = exterior_derivative(alg, *a.T);
    out.push_back(mu_locus_result("family.weak_phikt", "dT ≠ 0 unless m1 = m2 = 0",
                                  dT.comps(), P, "dT = 0"));
  }
}

} // namespace

// ---------------------------------------------------------------------------

Analysis analyze(const LieAlgebra &alg, const StructurePack &s) {
  require_valid(alg, s);
  if (auto j = jacobi_check(alg); !j) {
    const auto &w = *j.witness;
    std::ostringstream msg;
    msg << "Jacobi identity fails at (" << w.indices[0] + 1 << ","
        << w.indices[1] + 1 << "," << w.indices[2] + 1 << "): E"
        << w.indices[3] + 1 << " coefficient " << compact(w.lhs);
    throw ValidationError({msg.str()});
  }
  Analysis a{levi_civita(alg, s), {}, {}, {}, false, false, {}, {}, {}, {},
             {}, {}, {}, {}, {}, {}, {}, {}};
  a.F = fundamental_F(s, a.nabla);
  a.N = nijenhuis(a.F, s);
  a.classes = class_membership(a.F, s, a.nabla);
  a.killing = bool(killing_check(s, a.nabla));
  a.non_abelian = bool(non_abelian_structure_check(alg, s));
  a.norm_nabla_phi = square_norm_nabla_phi(s, a.nabla);
  a.R = curvature_tensor(alg, a.nabla, s);
  a.rho = ricci(a.R, s);
  a.tau = scalar_curv(a.rho, s);
  try {
    PhiKT p = phikt_connection(alg, s);
    a.T = p.T;
    a.D = p.D;
  } catch (const ClassGateError &e) {
    a.phikt_error = e.what();
  }
  if (a.D) {
    a.DT = covariant_derivative(*a.D, *a.T);
    a.K = curvature_tensor(alg, *a.D, s);
    a.rhoD = ricci(*a.K, s);
    a.tauD = scalar_curv(*a.rhoD, s);
    a.normT = norm_T(*a.T, s);
  }
  return a;
}

bool is_paper_family(const LieAlgebra &alg, const StructurePack &s) {
  const auto f = fixtures::paper_family();
  if (!alg.params() || !(*alg.params() == *f.alg.params()))
    return false;
  try {
    return alg == f.alg && s == f.s;
  } catch (const ParamSpaceMismatch &) {
    return false;
  }
}

std::vector<CheckResult> run_suite(const LieAlgebra &alg,
                                   const StructurePack &s,
                                   const SuiteOptions &options) {
  const Analysis a = analyze(alg, s);
  const std::size_t n = alg.dim();
  std::vector<CheckResult> out;

  // structure and bracket
  {
    const ValidationReport rep = validate_structure(alg, s);
    std::string note;
    for (const auto &m : rep.notes)
      note += (note.empty() ? "" : "; ") + m;
    out.push_back(make_result("structure.relations",
                              "φξ = 0, φ² = -Id + η⊗ξ, η(ξ) = 1, B-metric",
                              CheckOutcome::pass(), note));
  }
  out.push_back(make_result("structure.associated_metric",
                            "g̃(φx,φy) = -g̃(x,y) + η(x)η(y)",
                            associated_metric_check(s)));
  out.push_back(make_result("structure.projectors",
                            "h = -φ², v = η⊗ξ, h + v = Id, h² = h, v² = v, hv = 0",
                            projector_check(s)));
  out.push_back(make_result("lie.jacobi", "𝔖[[x,y],z] = 0", jacobi_check(alg)));
  out.push_back(equivalence("lie.killing", "(∇_xη)y + (∇_yη)x = 0 ⇔ L_ξ g = 0",
                            a.killing, lie_derivative_metric_zero(alg, s),
                            "∇η skew", "L_ξ g = 0"));
  {
    const char *why = "structure is not non-Abelian";
    out.push_back(gate("lie.non_abelian_in_F3_F7",
                       "[φx,φy] = -[x,y] ⇒ F₃⊕F₇", a.non_abelian, why, [&] {
                         return expect_equal(Scalar(a.classes.F3plusF7 ? 1 : 0),
                                             Scalar(1));
                       }));
    out.push_back(gate("lie.two_F", "2F(X,Y,Z) = g([X,φY] - φ[X,Y],Z) + (Y↔Z)",
                       a.non_abelian, why,
                       [&] { return two_F_bracket_check(alg, s, a.F); }));
    out.push_back(gate(
        "lie.class_conditions",
        "F₃: η([X,Y]) = 0; F₇: φ[φX,Y] = φ²[X,Y]; F₀: [X,Y] = -φ[φX,Y]",
        a.non_abelian, why, [&] {
          const LieClassConditions c = lie_class_conditions(alg, s);
          return all_of({expect_equal(Scalar(c.F3), Scalar(a.classes.F3), {0}),
                         expect_equal(Scalar(c.F7), Scalar(a.classes.F7), {1}),
                         expect_equal(Scalar(c.F0), Scalar(a.classes.F0), {2})});
        }));
  }

  // Levi-Civita connection and classes
  out.push_back(make_result(
      "lc.koszul", "∇g = 0, ∇_xy - ∇_yx = [x,y]",
      all_of({metric_compatibility_check(a.nabla, s),
              compare(torsion_of(alg, a.nabla, s), Tensor(n, 3))})));
  out.push_back(make_result("lc.nabla_eta", "(∇_xη)y = g(∇_xξ, y)",
                            nabla_eta_check(s, a.nabla)));
  out.push_back(make_result(
      "classes.F_symmetries",
      "F(x,y,z) = F(x,z,y) = F(x,φy,φz) + η(y)F(x,ξ,z) + η(z)F(x,y,ξ)",
      F_symmetry_check(a.F, s), "class: " + most_specific_class(a.classes)));
  out.push_back(equivalence("classes.F0_iff_F3_and_F7", "F₀ = F₃ ∩ F₇",
                            a.classes.F0, a.classes.F3 && a.classes.F7, "F₀",
                            "F₃ and F₇"));
  out.push_back(make_result(
      "classes.components_in_sum", "F₃ ∪ F₇ ⊂ F₃⊕F₇",
      expect_equal(Scalar((a.classes.F3 || a.classes.F7) && !a.classes.F3plusF7 ? 1 : 0),
                   Scalar())));

  // Nijenhuis tensor
  out.push_back(make_result("nijenhuis.routes",
                            "N from F agrees with [φ,φ] + dη⊗ξ",
                            compare(a.N, nijenhuis_bracket(alg, s))));
  {
    const NijenhuisForms forms = nijenhuis_forms(s, a.nabla);
    out.push_back(gate("nijenhuis.full_form",
                       "N(x,y) = 2(∇_{φx}φ)y - 2φ(∇_xφ)y + 2(∇_xη)y ξ",
                       a.classes.F3plusF7, "input not in class F₃⊕F₇",
                       [&] { return compare(forms.full, a.N); }));
    out.push_back(gate("nijenhuis.horizontal_form",
                       "N(x,y) = -2φ²(∇_{φx}φ)y - 2φ(∇_xφ)y", a.classes.F3,
                       "input not in class F₃",
                       [&] { return compare(forms.horizontal, a.N); }));
    out.push_back(gate("nijenhuis.vertical_form", "N(x,y) = 4(∇_xη)y ξ",
                       a.classes.F7, "input not in class F₇",
                       [&] { return compare(forms.vertical, a.N); }));
  }

  // φKT-connection
  auto need_D = [&](std::string name, std::string anchor,
                    const std::function<CheckResult()> &f) {
    out.push_back(a.D ? f()
                      : not_applicable(std::move(name), std::move(anchor),
                                       a.phikt_error));
  };
  need_D("phikt.Q_phi", "Q(x,y,φz) - Q(x,φy,z) = F(x,y,z), Q = T/2", [&] {
    return make_result("phikt.Q_phi", "Q(x,y,φz) - Q(x,φy,z) = F(x,y,z), Q = T/2",
                       theorem1a_check(*a.T, a.F, s));
  });
  need_D("phikt.Q_skew", "Q(x,y,z) = -Q(x,z,y)", [&] {
    return make_result("phikt.Q_skew", "Q(x,y,z) = -Q(x,z,y)",
                       theorem1b_check(*a.T));
  });
  need_D("phikt.torsion_skew", "T is a 3-form", [&] {
    return make_result("phikt.torsion_skew", "T is a 3-form",
                       alternating_check(*a.T));
  });
  need_D("phikt.ttf", "T(x,y,φz) - T(x,φy,z) = 2F(x,y,z)", [&] {
    return make_result("phikt.ttf", "T(x,y,φz) - T(x,φy,z) = 2F(x,y,z)",
                       ttf_check(*a.T, a.F, s));
  });
  need_D("phikt.torsion_vector_form", "cyclic form of T = lowered vector form", [&] {
    return make_result("phikt.torsion_vector_form",
                       "cyclic form of T = lowered vector form",
                       compare(*a.T, torsion_T37a_lowered(s, a.nabla)));
  });
  need_D("phikt.torsion_nijenhuis_form", "T = η∧dη + 1/4 𝔖N", [&] {
    return make_result("phikt.torsion_nijenhuis_form", "T = η∧dη + 1/4 𝔖N",
                       compare(*a.T, torsion_T37_wedge(alg, s, a.nabla, a.F, a.N)));
  });
  need_D("phikt.naturality", "Dφ = Dξ = Dη = Dg = 0", [&] {
    return make_result("phikt.naturality", "Dφ = Dξ = Dη = Dg = 0",
                       naturality_check(*a.D, s));
  });
  need_D("phikt.torsion_reproduced", "torsion of D equals T", [&] {
    return make_result("phikt.torsion_reproduced", "torsion of D equals T",
                       compare(torsion_of(alg, *a.D, s), *a.T));
  });
  need_D("phikt.deta", "dη(x,y) = 2(∇_xη)y = T(x,y,ξ) = 2F(x,φy,ξ)", [&] {
    return make_result("phikt.deta", "dη(x,y) = 2(∇_xη)y = T(x,y,ξ) = 2F(x,φy,ξ)",
                       deta_T_check(alg, s, a.nabla, *a.T, a.F));
  });
  need_D("phikt.cyclic_nijenhuis",
         "𝔖N = 3T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) + T(φx,φy,z)", [&] {
           return make_result("phikt.cyclic_nijenhuis",
                              "𝔖N = 3T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) + T(φx,φy,z)",
                              sNT_check(*a.T, a.N, s));
         });
  need_D("phikt.nijenhuis_torsion",
         "N = T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) - T(φx,φy,z)", [&] {
           return make_result("phikt.nijenhuis_torsion",
                              "N = T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) - T(φx,φy,z)",
                              lemma_NT_check(*a.T, a.N, s));
         });
  need_D("phikt.torsion_phi", "T(x,φy) = φT(x,y) - 2(∇_xφ)y, T(φx,y) = φT(x,y) + 2(∇_yφ)x",
         [&] {
           return make_result(
               "phikt.torsion_phi",
               "T(x,φy) = φT(x,y) - 2(∇_xφ)y, T(φx,y) = φT(x,y) + 2(∇_yφ)x",
               corollary_TKT_check(*a.T, a.nabla, s));
         });

  // curvature
  out.push_back(make_result("curvature.R_symmetries",
                            "R(x,y,z,w) = -R(y,x,z,w) = -R(x,y,w,z)",
                            curvature_antisymmetry_check(a.R)));
  out.push_back(make_result("curvature.R_bianchi", "𝔖R(x,y,z,w) = 0",
                            bianchi_check(a.R)));
  if (!a.D) {
    for (const char *name :
         {"curvature.K_symmetries", "curvature.K_phi", "curvature.KRT",
          "curvature.scalar_curvatures", "curvature.torsion_bianchi",
          "curvature.kaehler_iff_sT_form", "curvature.kaehler_iff_cyclic_DT",
          "curvature.KRDT", "curvature.parallel_torsion_form",
          "curvature.parallel_equivalences", "curvature.R_torsion",
          "forms.dT_expression"})
      out.push_back(not_applicable(name, "requires the φKT-connection", a.phikt_error));
  } else {
    const Tensor &K = *a.K, &T = *a.T, &DT = *a.DT;
    const bool kaehler = bool(phi_kaehler_check(K, s));
    const bool dt0 = DT.is_zero();
    out.push_back(make_result("curvature.K_symmetries",
                              "K(x,y,z,w) = -K(y,x,z,w) = -K(x,y,w,z)",
                              curvature_antisymmetry_check(K)));
    out.push_back(make_result("curvature.K_phi", "K(x,y,φz,φw) = -K(x,y,z,w)",
                              phi_property_check(K, s)));
    out.push_back(make_result(
        "curvature.KRT",
        "K = R + 1/2(D_xT)(y,z,w) - 1/2(D_yT)(x,z,w) + 1/4 g(T(x,y),T(z,w)) "
        "+ 1/4 𝔖g(T(x,y),T(z,w))",
        krt_identity_check(a.R, K, DT, T, s)));
    out.push_back(make_result("curvature.scalar_curvatures", "τ^D = τ - 1/4 ‖T‖²",
                              tdt_check(a.tau, *a.tauD, *a.normT)));
    out.push_back(make_result("curvature.torsion_bianchi",
                              "𝔖K = 𝔖(D_xT)(y,z,w) + 𝔖g(T(x,y),T(z,w))",
                              torsion_bianchi_check(K, DT, T, s)));
    out.push_back(equivalence(
        "curvature.kaehler_iff_sT_form",
        "K φ-Kähler ⇔ K = R + 1/4 g(T(x,y),T(z,w)) - 1/12 𝔖g(T(x,y),T(z,w))",
        kaehler, bool(kr_sT_form_check(a.R, K, T, s)), "φ-Kähler", "form holds"));
    out.push_back(equivalence("curvature.kaehler_iff_cyclic_DT",
                              "K φ-Kähler ⇔ 𝔖(D_xT)(y,z,w) = -𝔖g(T(x,y),T(z,w))",
                              kaehler, bool(dtgt_check(DT, T, s)), "φ-Kähler",
                              "identity holds"));
    out.push_back(gate("curvature.KRDT",
                       "K = R - 1/2(D_zT)(x,y,w) - 1/4 g(T(y,z),T(x,w)) - 1/4 "
                       "g(T(z,x),T(y,w))",
                       kaehler, "K is not of φ-Kähler type",
                       [&] { return krdt_check(a.R, K, DT, T, s); }));
    out.push_back(gate("curvature.parallel_torsion_form",
                       "DT = 0 ⇒ K = R + 1/4 g(T(x,y),T(z,w)) + 1/4 𝔖g(T(x,y),T(z,w))",
                       dt0, "D T != 0", [&] { return kr_dt0_check(a.R, K, T, s); }));
    {
      const auto eq = dparallel_equivalences(alg, DT, T, a.R, K, s);
      CheckResult r;
      if (!eq) {
        r = gated_result("curvature.parallel_equivalences",
                         "DT = 0: dT = 0 ⇔ 𝔖g(T,T) = 0 ⇔ K φ-Kähler, K = R + 1/4 g(T,T)",
                         Status::hypothesis_not_met, "D T != 0");
      } else {
        const bool all_same = eq->closed_T == eq->closed_T_ce &&
                              eq->closed_T == eq->sigma_TT_zero &&
                              eq->closed_T == eq->K_form3;
        r = make_result(
            "curvature.parallel_equivalences",
            "DT = 0: dT = 0 ⇔ 𝔖g(T,T) = 0 ⇔ K φ-Kähler, K = R + 1/4 g(T,T)",
            all_same ? CheckOutcome::pass()
                     : CheckOutcome::fail({{},
                                           Scalar(eq->closed_T ? 1 : 0),
                                           Scalar(eq->K_form3 ? 1 : 0)}),
            std::string("dT = 0: ") + (eq->closed_T ? "true" : "false") +
                ", CE dT = 0: " + (eq->closed_T_ce ? "true" : "false") +
                ", 𝔖g(T,T) = 0: " + (eq->sigma_TT_zero ? "true" : "false") +
                ", K form: " + (eq->K_form3 ? "true" : "false"));
      }
      out.push_back(r);
    }
    out.push_back(gate("curvature.R_torsion",
                       "R(x,y,φz,φw) = -R(x,y,z,w) - 1/4 g(T(x,y),T(z,w) + T(φz,φw)), "
                       "R(x,y,z,ξ) = 1/2 g(T(x,y),∇_zξ)",
                       dt0 && kaehler, "requires D T = 0 and K of φ-Kähler type",
                       [&] { return r_torsion_check(a.R, T, a.nabla, s); }));
    out.push_back(make_result(
        "forms.dT_expression",
        "dT = 𝔖(D_xT)(y,z,w) - (D_wT)(x,y,z) + 2𝔖g(T(x,y),T(z,w))",
        compare(torsion_differential_via_D(DT, T, s), exterior_derivative(alg, T))));

    if (a.classes.F7) {
      for (auto &r : f7_formula_suite(alg, s, a.nabla, *a.D, a.R, K, T))
        out.push_back(std::move(r));
    } else {
      out.push_back(not_applicable("f7.suite", "vertical-class identities",
                                   "input not in class F₇"));
    }
    if (a.classes.F3) {
      for (auto &r : f3_formula_suite(alg, s, a.nabla, *a.D, a.R, K, T))
        out.push_back(std::move(r));
    } else {
      out.push_back(not_applicable("f3.suite", "horizontal-class identities",
                                   "input not in class F₃"));
    }
  }

  // Einstein metrics
  {
    const EinsteinResult e = einstein_check(a.rho, s);
    if (!e.einstein) {
      out.push_back(gated_result("einstein.trace", "ρ = c g ⇒ τ = n c",
                                 Status::hypothesis_not_met,
                                 "not Einstein unless " + join(e.obstructions)));
    } else {
      out.push_back(make_result("einstein.trace", "ρ = c g ⇒ τ = n c",
                                expect_equal(a.tau, Scalar(static_cast<long>(n)) *
                                                        *e.constant),
                                "c = " + compact(*e.constant)));
    }
  }

  if (options.family_checks && is_paper_family(alg, s))
    family_checks(alg, s, a, out);
  return out;
}

std::string machine_line(const CheckResult &r) {
  std::ostringstream os;
  os << "CHECK " << r.name << " " << to_string(r.status);
  if (r.witness) {
    os << " witness=(";
    for (std::size_t i = 0; i < r.witness->indices.size(); ++i)
      os << (i ? "," : "") << r.witness->indices[i] + 1;
    os << ") lhs=" << compact(r.witness->lhs)
       << " rhs=" << compact(r.witness->rhs);
  }
  os << " anchor=\"" << r.anchor << "\"";
  return os.str();
}

void print_report(std::ostream &os, const std::vector<CheckResult> &results,
                  ReportFormat format) {
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto &r : results) {
    ++counts[static_cast<int>(r.status)];
    if (format == ReportFormat::machine) {
      os << machine_line(r) << "\n";
      continue;
    }
    std::string status = to_string(r.status);
    status.resize(19, ' ');
    os << status << r.name << "\n";
    os << "                   " << r.anchor << "\n";
    if (r.witness) {
      os << "                   at (";
      for (std::size_t i = 0; i < r.witness->indices.size(); ++i)
        os << (i ? "," : "") << r.witness->indices[i] + 1;
      os << "): lhs = " << r.witness->lhs << ", rhs = " << r.witness->rhs << "\n";
    }
    if (!r.note.empty())
      os << "                   note: " << r.note << "\n";
  }
  if (format == ReportFormat::text)
    os << results.size() << " checks: " << counts[0] << " pass, " << counts[1]
       << " fail, " << counts[2] << " hypothesis not met, " << counts[3]
       << " not applicable\n";
}

bool any_failed(const std::vector<CheckResult> &results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult &r) { return r.status == Status::fail; });
}

} // namespace acbm
