#include "acbm/levicivita.hpp"

namespace acbm {

std::string to_string(ConnectionKind kind) {
  return kind == ConnectionKind::levi_civita ? "levi_civita" : "phikt";
}

Connection levi_civita(const LieAlgebra &alg, const StructurePack &s) {
  const std::size_t n = alg.dim();
  // koszul(i, j, k) = 2 g(∇_{E_i}E_j, E_k)
  auto gc = [&](std::size_t a, std::size_t b, std::size_t k) {
    Scalar v;
    for (std::size_t m = 0; m < n; ++m)
      if (!alg.c(a, b, m).is_zero())
        v += alg.c(a, b, m) * s.g[m][k];
    return v;
  };
  Tensor koszul = Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    const auto i = ix[0], j = ix[1], k = ix[2];
    return gc(i, j, k) + gc(k, i, j) + gc(k, j, i);
  });
  const Scalar half(Rational(1, 2));
  Tensor gamma = Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    Scalar v;
    for (std::size_t k = 0; k < n; ++k)
      if (!s.g_inv[k][ix[2]].is_zero())
        v += koszul(ix[0], ix[1], k) * s.g_inv[k][ix[2]];
    return half * v;
  });
  return {std::move(gamma), ConnectionKind::levi_civita};
}

Vector nabla_vector(const Connection &conn, const Vector &x, const Vector &y) {
  const std::size_t n = conn.dim();
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero())
        continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!conn(i, j, k).is_zero())
          r[k] += w * conn(i, j, k);
    }
  }
  return r;
}

Tensor covariant_derivative(const Connection &conn, const Tensor &t) {
  const std::size_t n = conn.dim(), p = t.valence();
  if (p == 0)
    throw std::invalid_argument("covariant derivative needs valence >= 1");
  return Tensor::generate(n, p + 1, [&](const Tensor::Index &ix) {
    Scalar v;
    Tensor::Index sub(ix.begin() + 1, ix.end());
    for (std::size_t a = 0; a < p; ++a) {
      const std::size_t ja = sub[a];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &gk = conn(ix[0], ja, k);
        if (gk.is_zero())
          continue;
        sub[a] = k;
        v -= gk * t.at(sub);
      }
      sub[a] = ja;
    }
    return v;
  });
}

std::vector<Matrix> nabla_phi(const Connection &conn, const StructurePack &s) {
  const std::size_t n = conn.dim();
  std::vector<Matrix> out(n, zero_matrix(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = basis_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = basis_vector(n, j);
      const Vector v = sub(nabla_vector(conn, ei, s.phi_of(ej)),
                           s.phi_of(nabla_vector(conn, ei, ej)));
      for (std::size_t k = 0; k < n; ++k)
        out[i][k][j] = v[k];
    }
  }
  return out;
}

Vector nabla_xi(const Connection &conn, const StructurePack &s,
                const Vector &x) {
  return nabla_vector(conn, x, s.xi);
}

Tensor nabla_eta(const Connection &conn, const StructurePack &s) {
  return covariant_derivative(conn, eta_tensor(s));
}

Tensor fundamental_F(const StructurePack &s, const Connection &nabla) {
  if (nabla.kind != ConnectionKind::levi_civita)
    throw std::invalid_argument("F requires the Levi-Civita connection");
  const std::size_t n = s.dim();
  const auto np = nabla_phi(nabla, s);
  Tensor f = Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    Scalar v;
    for (std::size_t a = 0; a < n; ++a)
      if (!np[ix[0]][a][ix[1]].is_zero())
        v += np[ix[0]][a][ix[1]] * s.g[a][ix[2]];
    return v;
  });
  return f.with_role(TensorRole::F);
}

Scalar square_norm_nabla_phi(const StructurePack &s, const Connection &nabla) {
  const std::size_t n = s.dim();
  const auto np = nabla_phi(nabla, s);
  auto column = [&](std::size_t i, std::size_t k) {
    Vector v(n);
    for (std::size_t a = 0; a < n; ++a)
      v[a] = np[i][a][k];
    return v;
  };
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
                   s.metric(column(i, k), column(j, l));
        }
    }
  return total;
}

Scalar square_norm_nabla_phi_via_xi(const StructurePack &s,
                                    const Connection &nabla) {
  const std::size_t n = s.dim();
  std::vector<Vector> nx(n);
  for (std::size_t i = 0; i < n; ++i)
    nx[i] = nabla_xi(nabla, s, basis_vector(n, i));
  Scalar total;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!s.g_inv[i][j].is_zero())
        total += s.g_inv[i][j] * s.metric(nx[i], nx[j]);
  return Scalar(-2) * total;
}

CheckOutcome killing_check(const StructurePack &s, const Connection &nabla) {
  const Tensor ne = nabla_eta(nabla, s);
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto r = expect_equal(ne(i, j) + ne(j, i), Scalar(), {i, j});
      if (!r)
        return r;
    }
  return CheckOutcome::pass();
}

Tensor exterior_derivative(const LieAlgebra &alg, const Tensor &t) {
  if (!alternating_check(t))
    throw ValidationError({"exterior derivative: input is not alternating"});
  const std::size_t n = alg.dim(), p = t.valence();
  return Tensor::generate(n, p + 1, [&](const Tensor::Index &ix) {
    Scalar v;
    for (std::size_t i = 0; i < p + 1; ++i)
      for (std::size_t j = i + 1; j < p + 1; ++j) {
        Tensor::Index rest;
        rest.push_back(0);
        for (std::size_t a = 0; a < p + 1; ++a)
          if (a != i && a != j)
            rest.push_back(ix[a]);
        Scalar term;
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar &c = alg.c(ix[i], ix[j], k);
          if (c.is_zero())
            continue;
          rest[0] = k;
          term += c * t.at(rest);
        }
        if ((i + j) % 2 == 0)
          v += term;
        else
          v -= term;
      }
    return v;
  });
}

Tensor torsion_of(const LieAlgebra &alg, const Connection &conn,
                  const StructurePack &s) {
  const std::size_t n = alg.dim();
  return Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    Scalar v;
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar t = conn(ix[0], ix[1], m) - conn(ix[1], ix[0], m) -
                       alg.c(ix[0], ix[1], m);
      if (!t.is_zero())
        v += t * s.g[m][ix[2]];
    }
    return v;
  });
}

CheckOutcome metric_compatibility_check(const Connection &conn,
                                        const StructurePack &s) {
  return compare(covariant_derivative(conn, metric_tensor(s)),
                 Tensor(s.dim(), 3));
}

CheckOutcome naturality_check(const Connection &conn, const StructurePack &s) {
  const std::size_t n = s.dim();
  // Dφ as the (0,3) tensor g((D_iφ)E_j, E_k).
  const auto dp = nabla_phi(conn, s);
  Tensor dphi = Tensor::generate(n, 3, [&](const Tensor::Index &ix) {
    Scalar v;
    for (std::size_t a = 0; a < n; ++a)
      if (!dp[ix[0]][a][ix[1]].is_zero())
        v += dp[ix[0]][a][ix[1]] * s.g[a][ix[2]];
    return v;
  });
  CheckOutcome phi = compare(dphi, Tensor(n, 3));
  CheckOutcome xi = CheckOutcome::pass();
  for (std::size_t i = 0; i < n && xi; ++i) {
    const Vector v = nabla_xi(conn, s, basis_vector(n, i));
    for (std::size_t k = 0; k < n && xi; ++k)
      xi = expect_equal(v[k], Scalar(), {i, k});
  }
  return all_of({phi, xi, compare(nabla_eta(conn, s), Tensor(n, 2)),
                 metric_compatibility_check(conn, s)});
}

} // namespace acbm
