#pragma once

#include "acbm/structure.hpp"

namespace acbm {

enum class ConnectionKind { levi_civita, phikt };

std::string to_string(ConnectionKind kind);

/// Invariant linear connection: ∇_{E_i}E_j = Σ_k gamma(i, j, k) E_k.
struct Connection {
  Tensor gamma;
  ConnectionKind kind = ConnectionKind::levi_civita;

  std::size_t dim() const { return gamma.dim(); }
  const Scalar &operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma(i, j, k);
  }
  Connection substitute(const Assignment &a) const {
    return {gamma.substitute(a), kind};
  }
};

/// Koszul formula for a left-invariant metric.
Connection levi_civita(const LieAlgebra &alg, const StructurePack &s);

/// ∇_x y for constant-coefficient x, y.
Vector nabla_vector(const Connection &conn, const Vector &x, const Vector &y);

/// (∇_{E_i}P)(E_{j1}, ...) = -Σ_a P(..., ∇_{E_i}E_{ja}, ...); the direction
/// is the first index of the result.
Tensor covariant_derivative(const Connection &conn, const Tensor &t);

/// (∇_{E_i}φ) as a matrix in the same convention as StructurePack::phi.
std::vector<Matrix> nabla_phi(const Connection &conn, const StructurePack &s);

/// ∇_x ξ
Vector nabla_xi(const Connection &conn, const StructurePack &s,
                const Vector &x);

/// (∇_{E_i}η)(E_j)
Tensor nabla_eta(const Connection &conn, const StructurePack &s);

/// F(x, y, z) = g((∇_xφ)y, z)
Tensor fundamental_F(const StructurePack &s, const Connection &nabla);

/// g^{ij} g^{ks} g((∇_{e_i}φ)e_k, (∇_{e_j}φ)e_s)
Scalar square_norm_nabla_phi(const StructurePack &s, const Connection &nabla);

/// -2 g^{ij} g(∇_{e_i}ξ, ∇_{e_j}ξ)
Scalar square_norm_nabla_phi_via_xi(const StructurePack &s,
                                    const Connection &nabla);

/// (∇_xη)y + (∇_yη)x = 0
CheckOutcome killing_check(const StructurePack &s, const Connection &nabla);

/// Chevalley-Eilenberg differential of an invariant p-form, no prefactor.
/// Throws ValidationError when t is not alternating.
Tensor exterior_derivative(const LieAlgebra &alg, const Tensor &t);

/// g(∇_{E_i}E_j - ∇_{E_j}E_i - [E_i, E_j], E_k)
Tensor torsion_of(const LieAlgebra &alg, const Connection &conn,
                  const StructurePack &s);

/// ∇g = 0 componentwise.
CheckOutcome metric_compatibility_check(const Connection &conn,
                                        const StructurePack &s);

/// ∇φ = ∇ξ = ∇η = ∇g = 0 componentwise.
CheckOutcome naturality_check(const Connection &conn, const StructurePack &s);

} // namespace acbm
