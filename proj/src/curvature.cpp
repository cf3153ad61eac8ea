#include "acbm/curvature.hpp"

namespace acbm {

namespace {

using Args2 = std::array<Vector, 2>;
using Args4 = std::array<Vector, 4>;
using Quad = std::function<CheckOutcome(std::size_t, std::size_t, std::size_t,
                                        std::size_t)>;

const Scalar kHalf(Rational(1, 2));
const Scalar kQuarter(Rational(1, 4));

CheckOutcome quad_loop(std::size_t n, const Quad &f) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          if (auto r = f(x, y, z, w); !r)
            return r;
  return CheckOutcome::pass();
}

CheckOutcome quad_equal(std::size_t n,
                        const std::function<Scalar(std::size_t, std::size_t,
                                                   std::size_t, std::size_t)> &lhs,
                        const std::function<Scalar(std::size_t, std::size_t,
                                                   std::size_t, std::size_t)> &rhs) {
  return quad_loop(n, [&](auto x, auto y, auto z, auto w) {
    return expect_equal(lhs(x, y, z, w), rhs(x, y, z, w), {x, y, z, w});
  });
}

Tensor cyclic_DT(const Tensor &DT) {
  return Tensor::generate(DT.dim(), 4, [&](const Tensor::Index &ix) {
    const auto x = ix[0], y = ix[1], z = ix[2], w = ix[3];
    return DT(x, y, z, w) + DT(y, z, x, w) + DT(z, x, y, w);
  });
}

// Shared quantities of the vertical-class formulas.
struct VerticalData {
  std::size_t n;
  std::vector<Vector> nxi; // ∇_{E_i}ξ
  Tensor a;                // (∇_xη)y
  Tensor gxx;              // g(∇_xξ, ∇_yξ)

  VerticalData(const StructurePack &s, const Connection &nabla)
      : n(s.dim()), a(nabla_eta(nabla, s)) {
    for (std::size_t i = 0; i < n; ++i)
      nxi.push_back(nabla_xi(nabla, s, basis_vector(n, i)));
    gxx = Tensor::generate(n, 2, [&](const Tensor::Index &ix) {
      return s.metric(nxi[ix[0]], nxi[ix[1]]);
    });
  }

  // -η(y)η(z)g(∇xξ,∇wξ) + η(x)η(z)g(∇yξ,∇wξ)
  //   - η(x)η(w)g(∇yξ,∇zξ) + η(y)η(w)g(∇xξ,∇zξ)
  Scalar q(const StructurePack &s, std::size_t x, std::size_t y, std::size_t z,
           std::size_t w) const {
    const auto &e = s.eta;
    return -e[y] * e[z] * gxx(x, w) + e[x] * e[z] * gxx(y, w) -
           e[x] * e[w] * gxx(y, z) + e[y] * e[w] * gxx(x, z);
  }
};

CheckResult gate(std::string name, std::string anchor, bool hypothesis,
                 const std::string &hypothesis_text,
                 const std::function<CheckOutcome()> &check) {
  if (!hypothesis)
    return gated_result(std::move(name), std::move(anchor),
                        Status::hypothesis_not_met, hypothesis_text);
  return make_result(std::move(name), std::move(anchor), check());
}

// Pass when a property holds exactly when its characterization does.
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

const char *kKaehler = "K is not of φ-Kähler type";
const char *kDT0 = "D T != 0";
const char *kBoth = "requires D T = 0 and K of φ-Kähler type";

} // namespace

Tensor curvature_tensor(const LieAlgebra &alg, const Connection &conn,
                        const StructurePack &s) {
  const std::size_t n = alg.dim();
  // R(E_a,E_b)E_c = Σ_m Γ(b,c,m) ∇_a E_m - Γ(a,c,m) ∇_b E_m - c(a,b,m) ∇_m E_c
  Tensor L(n, 4);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector v = zero_vector(n);
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar &gbc = conn(b, c, m), &gac = conn(a, c, m),
                       &cab = alg.c(a, b, m);
          for (std::size_t k = 0; k < n; ++k) {
            if (!gbc.is_zero() && !conn(a, m, k).is_zero())
              v[k] += gbc * conn(a, m, k);
            if (!gac.is_zero() && !conn(b, m, k).is_zero())
              v[k] -= gac * conn(b, m, k);
            if (!cab.is_zero() && !conn(m, c, k).is_zero())
              v[k] -= cab * conn(m, c, k);
          }
        }
        const Vector low = s.lower(v);
        for (std::size_t d = 0; d < n; ++d)
          L(a, b, c, d) = low[d];
      }
  return L.with_role(conn.kind == ConnectionKind::levi_civita ? TensorRole::R
                                                              : TensorRole::K);
}

Tensor ricci(const Tensor &L, const StructurePack &s) {
  const std::size_t n = s.dim();
  return Tensor::generate(n, 2, [&](const Tensor::Index &ix) {
    Scalar v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!s.g_inv[i][j].is_zero())
          v += s.g_inv[i][j] * L(i, ix[0], ix[1], j);
    return v;
  });
}

Scalar scalar_curv(const Tensor &rho, const StructurePack &s) {
  const std::size_t n = s.dim();
  Scalar v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!s.g_inv[i][j].is_zero())
        v += s.g_inv[i][j] * rho(i, j);
  return v;
}

CheckOutcome curvature_antisymmetry_check(const Tensor &L) {
  return quad_loop(L.dim(), [&](auto x, auto y, auto z, auto w) {
    return all_of({expect_equal(L(x, y, z, w), -L(y, x, z, w), {x, y, z, w}),
                   expect_equal(L(x, y, z, w), -L(x, y, w, z), {x, y, z, w})});
  });
}

CheckOutcome bianchi_check(const Tensor &L) {
  return compare(cyclic_sum3(L), Tensor(L.dim(), 4));
}

CheckOutcome phi_property_check(const Tensor &L, const StructurePack &s) {
  const std::size_t n = s.dim();
  return quad_loop(n, [&](auto x, auto y, auto z, auto w) {
    const Args4 args{basis_vector(n, x), basis_vector(n, y),
                     s.phi_of(basis_vector(n, z)),
                     s.phi_of(basis_vector(n, w))};
    return expect_equal(L.eval(args), -L(x, y, z, w), {x, y, z, w});
  });
}

CheckOutcome phi_kaehler_check(const Tensor &L, const StructurePack &s) {
  return all_of({curvature_antisymmetry_check(L), bianchi_check(L),
                 phi_property_check(L, s)});
}

CheckOutcome krt_identity_check(const Tensor &R, const Tensor &K,
                                const Tensor &DT, const Tensor &T,
                                const StructurePack &s) {
  const Tensor G = gTT(T, s), SG = cyclic_sum3(G);
  return quad_equal(
      s.dim(), [&](auto x, auto y, auto z, auto w) { return K(x, y, z, w); },
      [&](auto x, auto y, auto z, auto w) {
        return R(x, y, z, w) + kHalf * DT(x, y, z, w) - kHalf * DT(y, x, z, w) +
               kQuarter * G(x, y, z, w) + kQuarter * SG(x, y, z, w);
      });
}

CheckOutcome tdt_check(const Scalar &tau, const Scalar &tauD,
                       const Scalar &normT) {
  return expect_equal(tauD, tau - kQuarter * normT);
}

CheckOutcome kr_sT_form_check(const Tensor &R, const Tensor &K,
                              const Tensor &T, const StructurePack &s) {
  const Tensor G = gTT(T, s), SG = cyclic_sum3(G);
  const Scalar twelfth(Rational(1, 12));
  return quad_equal(
      s.dim(), [&](auto x, auto y, auto z, auto w) { return K(x, y, z, w); },
      [&](auto x, auto y, auto z, auto w) {
        return R(x, y, z, w) + kQuarter * G(x, y, z, w) -
               twelfth * SG(x, y, z, w);
      });
}

CheckOutcome kr_dt0_check(const Tensor &R, const Tensor &K, const Tensor &T,
                          const StructurePack &s) {
  const Tensor G = gTT(T, s), SG = cyclic_sum3(G);
  return quad_equal(
      s.dim(), [&](auto x, auto y, auto z, auto w) { return K(x, y, z, w); },
      [&](auto x, auto y, auto z, auto w) {
        return R(x, y, z, w) + kQuarter * G(x, y, z, w) +
               kQuarter * SG(x, y, z, w);
      });
}

CheckOutcome krdt_check(const Tensor &R, const Tensor &K, const Tensor &DT,
                        const Tensor &T, const StructurePack &s) {
  const Tensor G = gTT(T, s);
  return quad_equal(
      s.dim(), [&](auto x, auto y, auto z, auto w) { return K(x, y, z, w); },
      [&](auto x, auto y, auto z, auto w) {
        return R(x, y, z, w) - kHalf * DT(z, x, y, w) -
               kQuarter * G(y, z, x, w) - kQuarter * G(z, x, y, w);
      });
}

CheckOutcome dtgt_check(const Tensor &DT, const Tensor &T,
                        const StructurePack &s) {
  return compare(cyclic_DT(DT), -sigma_gTT(T, s));
}

CheckOutcome torsion_bianchi_check(const Tensor &K, const Tensor &DT,
                                   const Tensor &T, const StructurePack &s) {
  return compare(cyclic_sum3(K), cyclic_DT(DT) + sigma_gTT(T, s));
}

CheckOutcome r_torsion_check(const Tensor &R, const Tensor &T,
                             const Connection &nabla, const StructurePack &s) {
  const std::size_t n = s.dim();
  const Tensor G = gTT(T, s);
  const Tensor Gphi = apply_slot(apply_slot(G, 2, s.phi), 3, s.phi);
  const Tensor Rphi = apply_slot(apply_slot(R, 2, s.phi), 3, s.phi);
  CheckOutcome first = compare(Rphi, -R - kQuarter * (G + Gphi));
  if (!first)
    return first;
  return quad_loop(n, [&](auto x, auto y, auto z, auto w) {
    if (w > 0)
      return CheckOutcome::pass();
    const Vector nz = nabla_xi(nabla, s, basis_vector(n, z));
    Scalar rhs;
    for (std::size_t k = 0; k < n; ++k)
      if (!nz[k].is_zero())
        rhs += T(x, y, k) * nz[k];
    const Scalar lhs = R.eval(Args4{basis_vector(n, x), basis_vector(n, y),
                                    basis_vector(n, z), s.xi});
    return expect_equal(lhs, kHalf * rhs, {x, y, z});
  });
}

std::optional<DParallelEquivalences>
dparallel_equivalences(const LieAlgebra &alg, const Tensor &DT,
                       const Tensor &T, const Tensor &R, const Tensor &K,
                       const StructurePack &s) {
  if (!DT.is_zero())
    return std::nullopt;
  DParallelEquivalences e;
  e.closed_T = torsion_differential_via_D(DT, T, s).is_zero();
  e.closed_T_ce = exterior_derivative(alg, T).is_zero();
  e.sigma_TT_zero = sigma_gTT(T, s).is_zero();
  const Tensor G = gTT(T, s);
  e.K_form3 = bool(phi_kaehler_check(K, s)) &&
              bool(compare(K, R + kQuarter * G));
  return e;
}

std::vector<CheckResult> f7_formula_suite(const LieAlgebra &alg,
                                          const StructurePack &s,
                                          const Connection &nabla,
                                          const Connection &D, const Tensor &R,
                                          const Tensor &K, const Tensor &T) {
  const Tensor F = fundamental_F(s, nabla);
  if (!F7_condition_check(F, s) || !killing_check(s, nabla))
    throw ClassGateError("input not in class F₇");
  const std::size_t n = s.dim();
  const VerticalData vd(s, nabla);
  const Tensor &a = vd.a;
  const Tensor DT = covariant_derivative(D, T);
  const bool dt0 = DT.is_zero();
  const bool kaehler = bool(phi_kaehler_check(K, s));
  const Tensor rho = ricci(R, s), rhoD = ricci(K, s);
  const Scalar tau = scalar_curv(rho, s), tauD = scalar_curv(rhoD, s);
  const Scalar nphi = square_norm_nabla_phi(s, nabla);
  auto Rphi = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
    return R.eval(Args4{basis_vector(n, x), basis_vector(n, y),
                        s.phi_of(basis_vector(n, z)),
                        s.phi_of(basis_vector(n, w))});
  };
  auto ap = [&](const Vector &x, const Vector &y) {
    return a.eval(Args2{x, y});
  };
  auto K_of = [&](auto x, auto y, auto z, auto w) { return K(x, y, z, w); };

  std::vector<CheckResult> out;
  out.push_back(make_result(
      "f7.torsion_vertical_form", "T(x,y) = 2{η(x)∇_yξ - η(y)∇_xξ + (∇_xη)y ξ}",
      compare(torsion_T7(s, nabla, F), T)));
  out.push_back(make_result("f7.torsion_cyclic_form",
                            "T = η∧dη = 2𝔖 η(x)F(y,φz,ξ)",
                            all_of({compare(torsion_T7_cyclic(s, F), T),
                                    compare(eta_wedge_deta(alg, s), T)})));
  out.push_back(make_result(
      "f7.norm_nabla_phi", "‖∇φ‖² = -2 g^{ij} g(∇_{e_i}ξ, ∇_{e_j}ξ)",
      expect_equal(nphi, square_norm_nabla_phi_via_xi(s, nabla))));
  out.push_back(make_result("f7.scalar_curvatures",
                            "τ^D = τ + 3/2 ‖∇φ‖²",
                            expect_equal(tauD, tau + Scalar(Rational(3, 2)) * nphi)));
  out.push_back(equivalence("f7.isotropic_iff_equal_scalar_curvatures",
                            "‖∇φ‖² = 0 ⇔ τ^D = τ", nphi.is_zero(),
                            tauD == tau, "isotropic", "τ^D = τ"));
  {
    const Tensor G = gTT(T, s);
    CheckOutcome expand = quad_equal(
        n, [&](auto x, auto y, auto z, auto w) { return G(x, y, z, w); },
        [&](auto x, auto y, auto z, auto w) {
          return Scalar(4) * (a(x, y) * a(z, w) + vd.q(s, x, y, z, w));
        });
    const Tensor deta = exterior_derivative(alg, eta_tensor(s));
    const Tensor SG = cyclic_sum3(G);
    CheckOutcome sig = quad_equal(
        n, [&](auto x, auto y, auto z, auto w) { return SG(x, y, z, w); },
        [&](auto x, auto y, auto z, auto w) {
          return Scalar(4) * (a(x, y) * a(z, w) + a(y, z) * a(x, w) +
                              a(z, x) * a(y, w));
        });
    CheckOutcome wedge_form =
        compare(SG, kHalf * wedge(deta, deta));
    out.push_back(make_result("f7.gTT_expansion",
                              "g(T(x,y),T(z,w)) = 4{(∇_xη)y(∇_zη)w + η-terms}",
                              expand));
    out.push_back(make_result(
        "f7.sigma_gTT", "𝔖 g(T(x,y),T(z,w)) = 4𝔖(∇_xη)y(∇_zη)w = 1/2(dη∧dη)",
        all_of({sig, wedge_form})));
  }
  {
    const Scalar third(Rational(1, 3));
    const bool form = bool(quad_equal(n, K_of, [&](auto x, auto y, auto z, auto w) {
      return R(x, y, z, w) + vd.q(s, x, y, z, w) +
             third * (Scalar(2) * a(x, y) * a(z, w) - a(y, z) * a(x, w) -
                      a(z, x) * a(y, w));
    }));
    out.push_back(equivalence("f7.kaehler_iff_KR7_form",
                              "K φ-Kähler ⇔ K = R + η-terms + 1/3{...}",
                              kaehler, form, "φ-Kähler", "form holds"));
  }
  out.push_back(gate("f7.K_parallel_torsion_form",
                     "DT = 0 ⇒ K = R + η-terms + 2(∇_xη)y(∇_zη)w + ...", dt0,
                     kDT0, [&] {
                       return quad_equal(n, K_of, [&](auto x, auto y, auto z,
                                                      auto w) {
                         return R(x, y, z, w) + vd.q(s, x, y, z, w) +
                                Scalar(2) * a(x, y) * a(z, w) +
                                a(y, z) * a(x, w) + a(z, x) * a(y, w);
                       });
                     }));
  out.push_back(gate("f7.K_parallel_kaehler_form",
                     "DT = 0, K φ-Kähler ⇒ K = R + (∇_xη)y(∇_zη)w + η-terms",
                     dt0 && kaehler, kBoth, [&] {
                       return quad_equal(n, K_of, [&](auto x, auto y, auto z,
                                                      auto w) {
                         return R(x, y, z, w) + a(x, y) * a(z, w) +
                                vd.q(s, x, y, z, w);
                       });
                     }));
  out.push_back(gate(
      "f7.ricci_relation",
      "ρ^D(y,z) = ρ(y,z) - 2g(∇_yξ,∇_zξ) + 1/2 η(y)η(z)‖∇φ‖²", kaehler,
      kKaehler, [&] {
        CheckOutcome r = CheckOutcome::pass();
        for (std::size_t y = 0; y < n && r; ++y)
          for (std::size_t z = 0; z < n && r; ++z)
            r = expect_equal(rhoD(y, z),
                             rho(y, z) - Scalar(2) * vd.gxx(y, z) +
                                 kHalf * s.eta[y] * s.eta[z] * nphi,
                             {y, z});
        return r;
      }));
  out.push_back(gate(
      "f7.R_phi_defect", "R(x,y,φz,φw) = -R(x,y,z,w) - η-terms + 1/3{...}",
      kaehler, kKaehler, [&] {
        const Scalar third(Rational(1, 3));
        return quad_equal(n, Rphi, [&](auto x, auto y, auto z, auto w) {
          const Vector X = basis_vector(n, x), Y = basis_vector(n, y),
                       Z = basis_vector(n, z), W = basis_vector(n, w);
          const Vector pZ = s.phi_of(Z), pW = s.phi_of(W);
          return -R(x, y, z, w) - vd.q(s, x, y, z, w) +
                 third * (a(x, z) * a(y, w) - a(x, w) * a(y, z) +
                          ap(X, pZ) * ap(Y, pW) - ap(X, pW) * ap(Y, pZ));
        });
      }));
  out.push_back(gate(
      "f7.R_xi", "R(x,y,z,ξ) = η(x)g(∇_yξ,∇_zξ) - η(y)g(∇_xξ,∇_zξ)", kaehler,
      kKaehler, [&] {
        CheckOutcome r = CheckOutcome::pass();
        for (std::size_t x = 0; x < n && r; ++x)
          for (std::size_t y = 0; y < n && r; ++y)
            for (std::size_t z = 0; z < n && r; ++z) {
              const Scalar lhs =
                  R.eval(Args4{basis_vector(n, x), basis_vector(n, y),
                               basis_vector(n, z), s.xi});
              r = expect_equal(lhs,
                               s.eta[x] * vd.gxx(y, z) - s.eta[y] * vd.gxx(x, z),
                               {x, y, z});
            }
        return r;
      }));
  out.push_back(gate("f7.R_phi_defect_parallel",
                     "DT = 0, K φ-Kähler ⇒ R(x,y,φz,φw) = -R(x,y,z,w) - η-terms",
                     dt0 && kaehler, kBoth, [&] {
                       return quad_equal(n, Rphi, [&](auto x, auto y, auto z,
                                                      auto w) {
                         return -R(x, y, z, w) - vd.q(s, x, y, z, w);
                       });
                     }));
  return out;
}

std::vector<CheckResult> f3_formula_suite(const LieAlgebra &alg,
                                          const StructurePack &s,
                                          const Connection &nabla,
                                          const Connection &D, const Tensor &R,
                                          const Tensor &K, const Tensor &T) {
  (void)alg;
  const Tensor F = fundamental_F(s, nabla);
  if (!F3_condition_check(F, s))
    throw ClassGateError("input not in class F₃");
  const std::size_t n = s.dim();
  const Tensor DT = covariant_derivative(D, T);
  const bool dt0 = DT.is_zero();
  const bool kaehler = bool(phi_kaehler_check(K, s));
  const Scalar tau = scalar_curv(ricci(R, s), s);
  const Scalar tauD = scalar_curv(ricci(K, s), s);
  const Scalar nphi = square_norm_nabla_phi(s, nabla);
  const auto np = nabla_phi(nabla, s);
  auto nphi_apply = [&](const Vector &x, const Vector &y) {
    Vector r = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero())
        r = add(r, scale(x[i], acbm::apply(np[i], y)));
    return r;
  };

  std::vector<CheckResult> out;
  out.push_back(make_result(
      "f3.torsion_horizontal_form",
      "T(x,y) = 1/2{2(∇_xφ)φy - (∇_yφ)φx + (∇_{φy}φ)x}",
      compare(torsion_T3(s, nabla, F), T)));
  out.push_back(make_result("f3.scalar_curvatures", "τ^D = τ + 3/8 ‖∇φ‖²",
                            expect_equal(tauD, tau + Scalar(Rational(3, 8)) * nphi)));
  out.push_back(gate("f3.isotropic_iff_equal_scalar_curvatures",
                     "K φ-Kähler ⇒ (‖∇φ‖² = 0 ⇔ τ^D = τ)", kaehler, kKaehler,
                     [&] {
                       return expect_equal(Scalar(nphi.is_zero() ? 1 : 0),
                                           Scalar(tauD == tau ? 1 : 0));
                     }));
  out.push_back(gate("f3.R_xi", "R(x,y,z,ξ) = 0", dt0 && kaehler, kBoth, [&] {
    CheckOutcome r = CheckOutcome::pass();
    for (std::size_t x = 0; x < n && r; ++x)
      for (std::size_t y = 0; y < n && r; ++y)
        for (std::size_t z = 0; z < n && r; ++z)
          r = expect_equal(R.eval(Args4{basis_vector(n, x), basis_vector(n, y),
                                        basis_vector(n, z), s.xi}),
                           Scalar(), {x, y, z});
    return r;
  }));
  out.push_back(gate(
      "f3.R_phi_defect",
      "R(x,y,φz,φw) = -R(x,y,z,w) + 1/2 g(T(x,y), (∇_{φz}φ)w + (∇_wφ)φz)",
      dt0 && kaehler, kBoth, [&] {
        return quad_loop(n, [&](auto x, auto y, auto z, auto w) {
          const Vector Z = basis_vector(n, z), W = basis_vector(n, w);
          const Vector pZ = s.phi_of(Z), pW = s.phi_of(W);
          const Scalar lhs =
              R.eval(Args4{basis_vector(n, x), basis_vector(n, y), pZ, pW});
          const Vector v = add(nphi_apply(pZ, W), nphi_apply(W, pZ));
          Scalar tv;
          for (std::size_t k = 0; k < n; ++k)
            if (!v[k].is_zero())
              tv += T(x, y, k) * v[k];
          return expect_equal(lhs, -R(x, y, z, w) + kHalf * tv, {x, y, z, w});
        });
      }));
  return out;
}

EinsteinResult einstein_check(const Tensor &rho, const StructurePack &s) {
  const std::size_t n = s.dim();
  EinsteinResult res;
  std::optional<Scalar> c;
  for (std::size_t i = 0; i < n && !c; ++i)
    for (std::size_t j = 0; j < n && !c; ++j)
      if (s.g[i][j].is_constant() && !s.g[i][j].is_zero())
        c = Scalar(Rational(1) / s.g[i][j].constant_value()) * rho(i, j);
  if (!c)
    throw std::domain_error("metric has no nonzero constant entry");
  std::vector<Scalar> residues;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      residues.push_back(rho(i, j) - *c * s.g[i][j]);
  res.obstructions = vanishing_conditions(residues);
  res.einstein = res.obstructions.empty();
  if (res.einstein)
    res.constant = c;
  return res;
}

} // namespace acbm
