#include "acbm/fixtures.hpp"
#include "acbm/verify.hpp"

#include <iostream>
#include <map>
#include <sstream>

using namespace acbm;

namespace {

// All comparisons below are exact polynomial or rational equality.
constexpr int kTolerance = 0;

struct Item {
  std::string label;
  bool ok;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Item> items;
};

std::string witness_text(const std::optional<Witness> &w) {
  if (!w)
    return {};
  std::ostringstream os;
  os << "witness (";
  for (std::size_t k = 0; k < w->indices.size(); ++k)
    os << (k ? "," : "") << w->indices[k] + 1;
  os << ") lhs=" << compact(w->lhs) << " rhs=" << compact(w->rhs);
  return os.str();
}

Item from_outcome(std::string label, const CheckOutcome &c) {
  return {std::move(label), c.ok, witness_text(c.witness)};
}

class Suite {
public:
  explicit Suite(const fixtures::Fixture &f) {
    for (auto &r : run_suite(f.alg, f.s))
      by_name_.emplace(r.name, std::move(r));
  }

  Item item(const std::string &name, const std::string &label) const {
    const auto it = by_name_.find(name);
    if (it == by_name_.end())
      return {label, false, "check " + name + " missing"};
    const CheckResult &r = it->second;
    std::string detail = witness_text(r.witness);
    if (!r.note.empty())
      detail += (detail.empty() ? "" : "; ") + r.note;
    if (r.status != Status::pass)
      detail = to_string(r.status) + (detail.empty() ? "" : ": " + detail);
    return {label, r.status == Status::pass, detail};
  }

private:
  std::map<std::string, CheckResult> by_name_;
};

Item equal_item(std::string label, const Scalar &actual, const Scalar &expected) {
  const bool ok = actual == expected;
  return {std::move(label), ok,
          "got " + compact(actual) + ", expected " + compact(expected)};
}

fixtures::Fixture at(std::vector<long> v) {
  std::vector<Rational> q(v.begin(), v.end());
  return fixtures::paper_family(q);
}

std::string point_text(const std::vector<long> &v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

const std::vector<std::vector<long>> &grid() {
  static const std::vector<std::vector<long>> g = {
      {1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 0},  {1, 0, 1, 0, 1, -1},
      {0, 0, 0, 0, 0, 1}, {2, -1, 1, 3, 0, 0}, {2, -1, 1, 3, 1, 2},
      {1, 1, 1, 1, 1, 1}, {0, 1, 0, 0, -2, 1}, {3, 0, -1, 2, 0, 0},
  };
  return g;
}

bool mu_zero(const std::vector<long> &v) { return v[4] == 0 && v[5] == 0; }

Criterion criterion1(const Suite &family) {
  return {1,
          "symbolic tables of the family (nabla, D, R, K, Ricci, scalar "
          "curvatures, norm of nabla phi)",
          {family.item("family.levi_civita_table", "Levi-Civita table"),
           family.item("family.phikt_table", "phiKT connection table"),
           family.item("family.riemann_table", "R components"),
           family.item("family.phikt_curvature_table", "K components"),
           family.item("family.ricci_tables", "rho and rhoD"),
           family.item("family.scalar_curvatures", "tau and tauD"),
           family.item("family.norm_nabla_phi", "norm of nabla phi = -8(m1^2 - m2^2)")}};
}

Criterion criterion2(const Suite &family) {
  Criterion c{2, "class F7, and F0 exactly when m1 = m2 = 0", {}};
  c.items.push_back(family.item("family.class_F7", "symbolic family is F7"));
  c.items.push_back(family.item("family.F0_iff_mu_zero", "F0 locus is m1 = m2 = 0"));
  for (const auto &[p, expect_F0] :
       std::vector<std::pair<std::vector<long>, bool>>{{{1, 0, 0, 0, 1, 0}, false},
                                                       {{1, 0, 0, 0, 0, 0}, true}}) {
    const auto f = at(p);
    const Analysis a = analyze(f.alg, f.s);
    c.items.push_back({"F0 at " + point_text(p) + (expect_F0 ? " holds" : " fails"),
                       a.classes.F0 == expect_F0 && a.classes.F7,
                       "class " + most_specific_class(a.classes)});
  }
  return c;
}

Criterion criterion3(const Analysis &a) {
  const bool ok = a.DT && a.DT->is_zero();
  return {3, "D-parallel torsion on the symbolic family",
          {{"covariant derivative D T vanishes identically", ok,
            a.DT ? "" : a.phikt_error}}};
}

Criterion criterion4(const Analysis &a, const Analysis &fixc) {
  Criterion c{4, "tauD = tau - 1/4 |T|^2", {}};
  c.items.push_back(from_outcome("polynomial identity on the family",
                                 tdt_check(a.tau, *a.tauD, *a.normT)));
  c.items.push_back(equal_item("tau at (1,0,0,0,1,0)", fixc.tau, Scalar(-12)));
  c.items.push_back(equal_item("tauD at (1,0,0,0,1,0)", *fixc.tauD, Scalar(-24)));
  c.items.push_back(equal_item("|T|^2 at (1,0,0,0,1,0)", *fixc.normT, Scalar(48)));
  return c;
}

Criterion criterion5(const Analysis &a) {
  const Scalar rhs = a.tau + Scalar(Rational(3, 2)) * a.norm_nabla_phi;
  return {5, "tauD = tau + 3/2 |nabla phi|^2 on the family",
          {equal_item("polynomial identity", *a.tauD, rhs)}};
}

Criterion criterion6(const Suite &family) {
  Criterion c{6, "K of phi-Kaehler type exactly when m1 = m2 = 0", {}};
  c.items.push_back(family.item("family.kaehler_iff_mu_zero", "symbolic locus"));
  for (const auto &p : grid()) {
    const auto f = at(p);
    const Analysis a = analyze(f.alg, f.s);
    const bool kaehler = phi_kaehler_check(*a.K, f.s).ok;
    const bool sT = kr_sT_form_check(a.R, *a.K, *a.T, f.s).ok;
    c.items.push_back({"at " + point_text(p), kaehler == mu_zero(p) && sT == kaehler,
                       std::string("kaehler=") + (kaehler ? "yes" : "no") +
                           " K=R+gTT-sigma form=" + (sT ? "yes" : "no")});
  }
  return c;
}

Criterion criterion7(const Suite &family, const fixtures::Fixture &f,
                     const Analysis &fixc) {
  Criterion c{7, "weak phiKT: dT != 0 unless m1 = m2 = 0", {}};
  c.items.push_back(family.item("family.weak_phikt", "CE dT vanishes only at m1 = m2 = 0"));
  const Tensor dT = exterior_derivative(f.alg, *fixc.T);
  const Tensor viaD = torsion_differential_via_D(*fixc.DT, *fixc.T, f.s);
  c.items.push_back({"CE dT nonzero at (1,0,0,0,1,0)", !dT.is_zero(),
                     "dT(E1,E2,E3,E4)=" + compact(dT(0, 1, 2, 3))});
  Item w = equal_item("CE dT(E2,E3,E4,E5) = -4 at (1,0,0,0,1,0)", dT(1, 2, 3, 4),
                      Scalar(-4));
  w.detail += "; D-based expression gives " + compact(viaD(1, 2, 3, 4)) +
              " there and " + compact(viaD(0, 1, 2, 3)) + " at (E1,E2,E3,E4)";
  c.items.push_back(w);
  c.items.push_back({"D-based expression agrees with CE dT", viaD == dT, ""});
  return c;
}

Criterion criterion8(const Suite &family) {
  Criterion c{8, "Einstein conditions", {}};
  c.items.push_back(family.item("family.einstein_conditions",
                                "symbolic conditions m1 m2 = -(l1 l3 + l2 l4), "
                                "3(m1^2 - m2^2) = -(l1^2 + l2^2 - l3^2 - l4^2)"));
  const auto f = fixtures::einstein_instance();
  const Analysis a = analyze(f.alg, f.s);
  const EinsteinResult e = einstein_check(a.rho, f.s);
  c.items.push_back({"(1,0,1,0,1,-1) is Einstein", e.einstein, ""});
  c.items.push_back({"(1,0,1,0,1,-1) is Ricci-flat", a.rho.is_zero(), ""});
  c.items.push_back({"(1,0,1,0,1,-1) is isotropic-F0",
                     isotropic_F0_check(a.norm_nabla_phi) && !a.F.is_zero(),
                     "|nabla phi|^2=" + compact(a.norm_nabla_phi)});
  return c;
}

Criterion criterion9() {
  Criterion c{9, "property suites on the family, (1,0,0,0,1,0), the Einstein "
                 "instance and the abelian fixture",
              {}};
  const std::vector<std::pair<std::string, std::string>> checks = {
      {"classes.F_symmetries", "F symmetries"},
      {"phikt.torsion_skew", "T totally skew"},
      {"phikt.Q_phi", "Q = T/2 condition (a)"},
      {"phikt.Q_skew", "Q = T/2 condition (b)"},
      {"phikt.torsion_nijenhuis_form", "T = eta^deta + 1/4 sigma N"},
      {"phikt.torsion_vector_form", "T = lowered vector form"},
      {"phikt.nijenhuis_torsion", "N in terms of T"},
      {"phikt.cyclic_nijenhuis", "sigma N in terms of T"},
      {"phikt.torsion_phi", "T and phi identities"},
      {"curvature.KRT", "K in terms of R, DT and T"},
      {"curvature.R_bianchi", "first Bianchi for R"},
      {"curvature.R_symmetries", "antisymmetries of R"},
      {"curvature.K_symmetries", "antisymmetries of K"},
      {"nijenhuis.routes", "N from F agrees with N from brackets"},
  };
  for (const auto &name : {"family", "fix-c", "einstein", "abelian"}) {
    const Suite suite(*fixtures::fixture_by_name(name));
    for (const auto &[check, label] : checks)
      c.items.push_back(suite.item(check, std::string(name) + ": " + label));
  }
  return c;
}

Criterion criterion10() {
  Criterion c{10, "negative controls", {}};
  {
    const auto f = fixtures::flipped_metric();
    const ValidationReport rep = validate_structure(f.alg, f.s);
    c.items.push_back({"flipped metric fails validation", !rep.ok,
                       rep.violations.empty() ? "" : rep.violations.front()});
  }
  {
    const auto f = fixtures::non_jacobi();
    const CheckOutcome j = jacobi_check(f.alg);
    c.items.push_back({"non-Jacobi constants fail with a witness",
                       !j.ok && j.witness.has_value(), witness_text(j.witness)});
  }
  {
    const auto f = fixtures::non_killing();
    std::string message;
    try {
      phikt_connection(f.alg, f.s);
    } catch (const ClassGateError &e) {
      message = e.what();
    }
    c.items.push_back({"non-Killing input has no phiKT connection",
                       !message.empty(), message});
  }
  return c;
}

bool report(const Criterion &c) {
  bool ok = true;
  for (const auto &i : c.items)
    ok = ok && i.ok;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
            << c.title << "\n";
  for (const auto &i : c.items)
    if (!i.ok)
      std::cout << "    failed: " << i.label
                << (i.detail.empty() ? "" : " (" + i.detail + ")") << "\n";
    else if (c.number == 7 && !i.detail.empty())
      std::cout << "    " << i.label << " (" << i.detail << ")\n";
  return ok;
}

} // namespace

int main() {
  const auto family = fixtures::paper_family();
  const auto fc = fixtures::fix_c();
  const Analysis a = analyze(family.alg, family.s);
  const Analysis fixc = analyze(fc.alg, fc.s);
  const Suite suite(family);

  std::cout << "tolerance: " << kTolerance << " (exact arithmetic)\n";
  const std::vector<Criterion> criteria = {
      criterion1(suite),        criterion2(suite),
      criterion3(a),            criterion4(a, fixc),
      criterion5(a),            criterion6(suite),
      criterion7(suite, fc, fixc), criterion8(suite),
      criterion9(),             criterion10(),
  };
  int failed = 0;
  for (const auto &c : criteria)
    failed += report(c) ? 0 : 1;
  std::cout << criteria.size() - failed << " of " << criteria.size()
            << " criteria passed\n";
  return failed ? 1 : 0;
}
