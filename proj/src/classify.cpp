#include "acbm/classify.hpp"

namespace acbm {

namespace {

// Lowers a vector-valued bilinear map f(E_i, E_j) to a valence-3 tensor.
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

// (∇_xφ)y for arbitrary x, y.
Vector nabla_phi_apply(const std::vector<Matrix> &np, const Vector &x,
                       const Vector &y) {
  const std::size_t n = y.size();
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero())
      r = add(r, scale(x[i], acbm::apply(np[i], y)));
  return r;
}

} // namespace

std::string most_specific_class(const ClassMembership &m) {
  if (m.F0)
    return "F0";
  if (m.F3)
    return "F3";
  if (m.F7)
    return "F7";
  if (m.F3plusF7)
    return "F3+F7";
  return "none";
}

CheckOutcome F_symmetry_check(const Tensor &F, const StructurePack &s) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = basis_vector(n, i), y = basis_vector(n, j),
                     z = basis_vector(n, k);
        if (auto r = expect_equal(F(i, j, k), F(i, k, j), {i, j, k}); !r)
          return r;
        const std::array<Vector, 3> a{x, s.phi_of(y), s.phi_of(z)};
        const std::array<Vector, 3> b{x, s.xi, z};
        const std::array<Vector, 3> c{x, y, s.xi};
        const Scalar rhs = F.eval(a) + s.eta[j] * F.eval(b) +
                           s.eta[k] * F.eval(c);
        if (auto r = expect_equal(F(i, j, k), rhs, {i, j, k}); !r)
          return r;
      }
  return CheckOutcome::pass();
}

CheckOutcome cyclic_F_check(const Tensor &F) {
  return compare(cyclic_sum3(F), Tensor(F.dim(), 3));
}

CheckOutcome F3_condition_check(const Tensor &F, const StructurePack &s) {
  if (auto r = cyclic_F_check(F); !r)
    return r;
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector a = basis_vector(n, i), b = basis_vector(n, j);
      const std::array<Vector, 3> xi_first{s.xi, a, b};
      const std::array<Vector, 3> xi_last{a, b, s.xi};
      if (auto r = expect_equal(F.eval(xi_first), Scalar(), {i, j}); !r)
        return r;
      if (auto r = expect_equal(F.eval(xi_last), Scalar(), {i, j}); !r)
        return r;
    }
  return CheckOutcome::pass();
}

CheckOutcome F7_condition_check(const Tensor &F, const StructurePack &s) {
  if (auto r = cyclic_F_check(F); !r)
    return r;
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector px = s.phi_of(basis_vector(n, i)),
                     py = s.phi_of(basis_vector(n, j)),
                     pz = s.phi_of(basis_vector(n, k));
        const std::array<Vector, 3> a{px, py, basis_vector(n, k)};
        const std::array<Vector, 3> b{px, basis_vector(n, j), pz};
        if (auto r = expect_equal(F(i, j, k), -F.eval(a) - F.eval(b),
                                  {i, j, k});
            !r)
          return r;
      }
  return CheckOutcome::pass();
}

ClassMembership class_membership(const Tensor &F, const StructurePack &s,
                                 const Connection &nabla) {
  ClassMembership m;
  m.F3 = bool(F3_condition_check(F, s));
  m.F7 = bool(F7_condition_check(F, s));
  m.F3plusF7 = bool(cyclic_F_check(F)) && bool(killing_check(s, nabla));
  m.F0 = F.is_zero();
  return m;
}

void require_F3plusF7(const Tensor &F, const StructurePack &s,
                      const Connection &nabla) {
  if (!cyclic_F_check(F) || !killing_check(s, nabla))
    throw ClassGateError("φKT-connection does not exist");
}

Tensor nijenhuis(const Tensor &F, const StructurePack &s) {
  const std::size_t n = s.dim();
  Tensor N(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = basis_vector(n, i), y = basis_vector(n, j),
                     z = basis_vector(n, k);
        const Vector px = s.phi_of(x), py = s.phi_of(y), pz = s.phi_of(z);
        auto f = [&](const Vector &a, const Vector &b, const Vector &c) {
          const std::array<Vector, 3> args{a, b, c};
          return F.eval(args);
        };
        Scalar v = f(px, y, z) - f(py, x, z) - f(x, y, pz) + f(y, x, pz);
        if (!s.eta[k].is_zero())
          v += (f(x, py, s.xi) - f(y, px, s.xi)) * s.eta[k];
        N(i, j, k) = v;
      }
  return N.with_role(TensorRole::N);
}

Tensor nijenhuis_bracket(const LieAlgebra &alg, const StructurePack &s) {
  Tensor N = lower_bilinear(s, [&](const Vector &x, const Vector &y) {
    const Vector px = s.phi_of(x), py = s.phi_of(y);
    Vector v = bracket(alg, px, py);
    v = add(v, s.phi_of(s.phi_of(bracket(alg, x, y))));
    v = sub(v, s.phi_of(bracket(alg, px, y)));
    v = sub(v, s.phi_of(bracket(alg, x, py)));
    const Scalar deta = -s.eta_of(bracket(alg, x, y));
    return add(v, scale(deta, s.xi));
  });
  return N.with_role(TensorRole::N);
}

std::pair<Tensor, Tensor> nijenhuis_hv_split(const Tensor &N,
                                             const StructurePack &s) {
  const std::size_t n = s.dim();
  Tensor v(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::array<Vector, 3> args{basis_vector(n, i), basis_vector(n, j),
                                       s.xi};
      const Scalar nxi = N.eval(args);
      for (std::size_t k = 0; k < n; ++k)
        v(i, j, k) = nxi * s.eta[k];
    }
  return {N - v, v};
}

NijenhuisForms nijenhuis_forms(const StructurePack &s,
                               const Connection &nabla) {
  const auto np = nabla_phi(nabla, s);
  const Tensor ne = nabla_eta(nabla, s);
  auto neta = [&](const Vector &x, const Vector &y) {
    return ne.eval(std::array<Vector, 2>{x, y});
  };
  NijenhuisForms out;
  out.full = lower_bilinear(s, [&](const Vector &x, const Vector &y) {
    Vector v = scale(Scalar(2), nabla_phi_apply(np, s.phi_of(x), y));
    v = sub(v, scale(Scalar(2), s.phi_of(nabla_phi_apply(np, x, y))));
    return add(v, scale(Scalar(2) * neta(x, y), s.xi));
  });
  out.horizontal = lower_bilinear(s, [&](const Vector &x, const Vector &y) {
    const Vector a = s.phi_of(s.phi_of(nabla_phi_apply(np, s.phi_of(x), y)));
    const Vector b = s.phi_of(nabla_phi_apply(np, x, y));
    return scale(Scalar(-2), add(a, b));
  });
  out.vertical = lower_bilinear(s, [&](const Vector &x, const Vector &y) {
    return scale(Scalar(4) * neta(x, y), s.xi);
  });
  return out;
}

LieClassConditions lie_class_conditions(const LieAlgebra &alg,
                                        const StructurePack &s) {
  if (!non_abelian_structure_check(alg, s))
    throw ClassGateError("structure is not non-Abelian");
  const std::size_t n = alg.dim();
  LieClassConditions c{true, true, true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = basis_vector(n, i), y = basis_vector(n, j);
      const Vector xy = bracket(alg, x, y);
      const Vector pxy = bracket(alg, s.phi_of(x), y);
      c.F3 = c.F3 && s.eta_of(xy).is_zero();
      c.F7 = c.F7 && s.phi_of(pxy) == s.phi_of(s.phi_of(xy));
      c.F0 = c.F0 && xy == scale(Scalar(-1), s.phi_of(pxy));
    }
  return c;
}

CheckOutcome two_F_bracket_check(const LieAlgebra &alg, const StructurePack &s,
                                 const Tensor &F) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = basis_vector(n, i), y = basis_vector(n, j),
                     z = basis_vector(n, k);
        // [X,φA] - φ[X,A]
        auto part = [&](const Vector &a) {
          return sub(bracket(alg, x, s.phi_of(a)), s.phi_of(bracket(alg, x, a)));
        };
        const Scalar rhs = s.metric(part(y), z) + s.metric(part(z), y);
        if (auto r = expect_equal(Scalar(2) * F(i, j, k), rhs, {i, j, k}); !r)
          return r;
      }
  return CheckOutcome::pass();
}

bool isotropic_F0_check(const Scalar &norm) { return norm.is_zero(); }

} // namespace acbm
