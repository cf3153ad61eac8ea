#include "acbm/phikt.hpp"

namespace acbm {

namespace {

using Args3 = std::array<Vector, 3>;

Scalar ev(const Tensor &t, const Vector &a, const Vector &b, const Vector &c) {
  return t.eval(Args3{a, b, c});
}

Vector nabla_phi_apply(const std::vector<Matrix> &np, const Vector &x,
                       const Vector &y) {
  Vector r = zero_vector(y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      r = add(r, scale(x[i], acbm::apply(np[i], y)));
  return r;
}

Tensor lower_bilinear(const StructurePack &s,
                      const std::function<Vector(const Vector &, const Vector &)> &f) {
  const std::size_t n = s.dim();
  Tensor t(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector low = s.lower(f(basis_vector(n, i), basis_vector(n, j)));
      for (std::size_t k = 0; k < n; ++k)
        t(i, j, k) = low[k];
    }
  return t;
}

// T(x, y) as a vector: g^{-1} applied to T(x, y, ·).
Vector raised(const Tensor &T, const StructurePack &s, const Vector &x,
              const Vector &y) {
  const std::size_t n = s.dim();
  Vector low(n);
  for (std::size_t k = 0; k < n; ++k)
    low[k] = ev(T, x, y, basis_vector(n, k));
  return s.raise(low);
}

CheckOutcome triple_loop(
    std::size_t n,
    const std::function<CheckOutcome(std::size_t, std::size_t, std::size_t)> &f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (auto r = f(i, j, k); !r)
          return r;
  return CheckOutcome::pass();
}

const Scalar kHalf(Rational(1, 2));
const Scalar kQuarter(Rational(1, 4));

} // namespace

Tensor torsion_T37(const StructurePack &s, const Connection &nabla,
                   const Tensor &F) {
  require_F3plusF7(F, s, nabla);
  const std::size_t n = s.dim();
  Tensor T = Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    const Vector e[3] = {basis_vector(n, ix[0]), basis_vector(n, ix[1]),
                         basis_vector(n, ix[2])};
    Scalar sum;
    for (std::size_t r = 0; r < 3; ++r) {
      const Vector &x = e[r], &y = e[(r + 1) % 3], &z = e[(r + 2) % 3];
      const Vector pz = s.phi_of(z);
      sum += ev(F, x, y, pz) - Scalar(3) * s.eta_of(x) * ev(F, y, pz, s.xi);
    }
    return -kHalf * sum;
  });
  return T.with_role(TensorRole::T);
}

Tensor eta_wedge_deta(const LieAlgebra &alg, const StructurePack &s) {
  const Tensor eta = eta_tensor(s);
  return wedge(eta, exterior_derivative(alg, eta));
}

Tensor torsion_T37_wedge(const LieAlgebra &alg, const StructurePack &s,
                         const Connection &nabla, const Tensor &F,
                         const Tensor &N) {
  require_F3plusF7(F, s, nabla);
  return eta_wedge_deta(alg, s) + kQuarter * cyclic_sum3(N);
}

Tensor torsion_T37a_lowered(const StructurePack &s, const Connection &nabla) {
  const auto np = nabla_phi(nabla, s);
  const Tensor ne = nabla_eta(nabla, s);
  return lower_bilinear(s, [&](const Vector &x, const Vector &y) {
    const Vector px = s.phi_of(x), py = s.phi_of(y);
    Vector v = scale(Scalar(2), nabla_phi_apply(np, x, py));
    v = sub(v, nabla_phi_apply(np, y, px));
    v = add(v, nabla_phi_apply(np, py, x));
    v = add(v, scale(Scalar(3) * s.eta_of(x), nabla_xi(nabla, s, y)));
    v = sub(v, scale(Scalar(4) * s.eta_of(y), nabla_xi(nabla, s, x)));
    v = add(v, scale(Scalar(2) * ne.eval(std::array<Vector, 2>{x, y}), s.xi));
    return scale(kHalf, v);
  });
}

Tensor torsion_T3(const StructurePack &s, const Connection &nabla,
                  const Tensor &F) {
  if (!F3_condition_check(F, s))
    throw ClassGateError("input not in class F₃");
  const auto np = nabla_phi(nabla, s);
  Tensor T = lower_bilinear(s, [&](const Vector &x, const Vector &y) {
    const Vector px = s.phi_of(x), py = s.phi_of(y);
    Vector v = scale(Scalar(2), nabla_phi_apply(np, x, py));
    v = sub(v, nabla_phi_apply(np, y, px));
    v = add(v, nabla_phi_apply(np, py, x));
    return scale(kHalf, v);
  });
  return T.with_role(TensorRole::T);
}

Tensor torsion_T7(const StructurePack &s, const Connection &nabla,
                  const Tensor &F) {
  if (!F7_condition_check(F, s) || !killing_check(s, nabla))
    throw ClassGateError("input not in class F₇");
  const Tensor ne = nabla_eta(nabla, s);
  Tensor T = lower_bilinear(s, [&](const Vector &x, const Vector &y) {
    Vector v = scale(s.eta_of(x), nabla_xi(nabla, s, y));
    v = sub(v, scale(s.eta_of(y), nabla_xi(nabla, s, x)));
    v = add(v, scale(ne.eval(std::array<Vector, 2>{x, y}), s.xi));
    return scale(Scalar(2), v);
  });
  return T.with_role(TensorRole::T);
}

Tensor torsion_T7_cyclic(const StructurePack &s, const Tensor &F) {
  const std::size_t n = s.dim();
  return Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    Scalar sum;
    for (std::size_t r = 0; r < 3; ++r) {
      const Vector x = basis_vector(n, ix[r]);
      const Vector y = basis_vector(n, ix[(r + 1) % 3]);
      const Vector z = basis_vector(n, ix[(r + 2) % 3]);
      sum += s.eta_of(x) * ev(F, y, s.phi_of(z), s.xi);
    }
    return Scalar(2) * sum;
  });
}

Connection make_D(const Connection &nabla, const Tensor &T,
                  const StructurePack &s) {
  const std::size_t n = s.dim();
  Tensor gamma = Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    Scalar v;
    for (std::size_t m = 0; m < n; ++m)
      if (!s.g_inv[m][ix[2]].is_zero())
        v += T(ix[0], ix[1], m) * s.g_inv[m][ix[2]];
    return nabla(ix[0], ix[1], ix[2]) + kHalf * v;
  });
  return {std::move(gamma), ConnectionKind::phikt};
}

Connection build_D(const LieAlgebra &alg, const StructurePack &s,
                   const Connection &nabla, const Tensor &T) {
  if (auto r = alternating_check(T); !r)
    throw ValidationError({"torsion is not a 3-form"});
  Connection D = make_D(nabla, T, s);
  if (auto r = naturality_check(D, s); !r)
    throw ValidationError({"connection is not natural"});
  if (auto r = compare(torsion_of(alg, D, s), T); !r)
    throw ValidationError({"connection does not reproduce its torsion"});
  return D;
}

CheckOutcome theorem1a_check(const Tensor &T, const Tensor &F,
                             const StructurePack &s) {
  const std::size_t n = s.dim();
  return triple_loop(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector x = basis_vector(n, i), y = basis_vector(n, j),
                 z = basis_vector(n, k);
    const Scalar lhs =
        kHalf * (ev(T, x, y, s.phi_of(z)) - ev(T, x, s.phi_of(y), z));
    return expect_equal(lhs, F(i, j, k), {i, j, k});
  });
}

CheckOutcome theorem1b_check(const Tensor &T) {
  return triple_loop(T.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return expect_equal(kHalf * T(i, j, k), -kHalf * T(i, k, j), {i, j, k});
  });
}

CheckOutcome theorem1_check(const Tensor &T, const Tensor &F,
                            const StructurePack &s) {
  return all_of({theorem1a_check(T, F, s), theorem1b_check(T)});
}

CheckOutcome ttf_check(const Tensor &T, const Tensor &F,
                       const StructurePack &s) {
  const std::size_t n = s.dim();
  return triple_loop(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector x = basis_vector(n, i), y = basis_vector(n, j),
                 z = basis_vector(n, k);
    return expect_equal(ev(T, x, y, s.phi_of(z)) - ev(T, x, s.phi_of(y), z),
                        Scalar(2) * F(i, j, k), {i, j, k});
  });
}

CheckOutcome corollary_TKT_check(const Tensor &T, const Connection &nabla,
                                 const StructurePack &s) {
  const std::size_t n = s.dim();
  const auto np = nabla_phi(nabla, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = basis_vector(n, i), y = basis_vector(n, j);
      const Vector pTxy = s.phi_of(raised(T, s, x, y));
      const Vector lhs1 = raised(T, s, x, s.phi_of(y));
      const Vector rhs1 =
          sub(pTxy, scale(Scalar(2), nabla_phi_apply(np, x, y)));
      const Vector lhs2 = raised(T, s, s.phi_of(x), y);
      const Vector rhs2 =
          add(pTxy, scale(Scalar(2), nabla_phi_apply(np, y, x)));
      for (std::size_t k = 0; k < n; ++k) {
        if (auto r = expect_equal(lhs1[k], rhs1[k], {i, j, k}); !r)
          return r;
        if (auto r = expect_equal(lhs2[k], rhs2[k], {i, j, k}); !r)
          return r;
      }
    }
  return CheckOutcome::pass();
}

CheckOutcome lemma_NT_check(const Tensor &T, const Tensor &N,
                            const StructurePack &s) {
  const std::size_t n = s.dim();
  return triple_loop(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector x = basis_vector(n, i), y = basis_vector(n, j),
                 z = basis_vector(n, k);
    const Vector px = s.phi_of(x), py = s.phi_of(y), pz = s.phi_of(z);
    const Scalar rhs = T(i, j, k) + ev(T, x, py, pz) + ev(T, px, y, pz) -
                       ev(T, px, py, z);
    return expect_equal(N(i, j, k), rhs, {i, j, k});
  });
}

CheckOutcome sNT_check(const Tensor &T, const Tensor &N,
                       const StructurePack &s) {
  const std::size_t n = s.dim();
  const Tensor sn = cyclic_sum3(N);
  return triple_loop(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector x = basis_vector(n, i), y = basis_vector(n, j),
                 z = basis_vector(n, k);
    const Vector px = s.phi_of(x), py = s.phi_of(y), pz = s.phi_of(z);
    const Scalar rhs = Scalar(3) * T(i, j, k) + ev(T, x, py, pz) +
                       ev(T, px, y, pz) + ev(T, px, py, z);
    return expect_equal(sn(i, j, k), rhs, {i, j, k});
  });
}

CheckOutcome deta_T_check(const LieAlgebra &alg, const StructurePack &s,
                          const Connection &nabla, const Tensor &T,
                          const Tensor &F) {
  const std::size_t n = s.dim();
  const Tensor deta = exterior_derivative(alg, eta_tensor(s));
  const Tensor ne = nabla_eta(nabla, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = basis_vector(n, i), y = basis_vector(n, j);
      const Scalar two_ne = Scalar(2) * ne(i, j);
      const Scalar txy = ev(T, x, y, s.xi);
      const Scalar two_f = Scalar(2) * ev(F, x, s.phi_of(y), s.xi);
      if (auto r = all_of({expect_equal(deta(i, j), two_ne, {i, j}),
                           expect_equal(two_ne, txy, {i, j}),
                           expect_equal(txy, two_f, {i, j})});
          !r)
        return r;
    }
  return CheckOutcome::pass();
}

Scalar norm_T(const Tensor &T, const StructurePack &s) {
  const std::size_t n = s.dim();
  std::vector<Vector> raised_pairs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      raised_pairs[i * n + k] =
          raised(T, s, basis_vector(n, i), basis_vector(n, k));
  Scalar total;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.g_inv[i][j].is_zero())
        continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (s.g_inv[k][l].is_zero())
            continue;
          total += s.g_inv[i][j] * s.g_inv[k][l] *
                   s.metric(raised_pairs[i * n + k], raised_pairs[j * n + l]);
        }
    }
  return total;
}

Tensor gTT(const Tensor &T, const StructurePack &s) {
  const std::size_t n = s.dim();
  std::vector<Vector> rp(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      rp[i * n + k] = raised(T, s, basis_vector(n, i), basis_vector(n, k));
  return Tensor::generate(n, 4, [&](const Tensor::Index &ix) {
    return s.metric(rp[ix[0] * n + ix[1]], rp[ix[2] * n + ix[3]]);
  });
}

Tensor sigma_gTT(const Tensor &T, const StructurePack &s) {
  return cyclic_sum3(gTT(T, s));
}

Tensor torsion_differential_via_D(const Tensor &DT, const Tensor &T,
                                  const StructurePack &s) {
  const std::size_t n = s.dim();
  const Tensor sg = sigma_gTT(T, s);
  return Tensor::generate(n, 4, [&](const Tensor::Index &ix) {
    const auto x = ix[0], y = ix[1], z = ix[2], w = ix[3];
    return DT(x, y, z, w) + DT(y, z, x, w) + DT(z, x, y, w) - DT(w, x, y, z) +
           Scalar(2) * sg(x, y, z, w);
  });
}

PhiKT phikt_connection(const LieAlgebra &alg, const StructurePack &s) {
  PhiKT out;
  out.nabla = levi_civita(alg, s);
  out.F = fundamental_F(s, out.nabla);
  out.T = torsion_T37(s, out.nabla, out.F);
  out.D = build_D(alg, s, out.nabla, out.T);
  return out;
}

} // namespace acbm
