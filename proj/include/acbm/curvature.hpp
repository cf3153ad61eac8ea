#pragma once

#include "acbm/phikt.hpp"

#include <optional>

namespace acbm {

/// L(x,y,z,w) = g(R(x,y)z, w) with R(x,y) = [∇_x,∇_y] - ∇_{[x,y]}.
/// Tagged R for a Levi-Civita connection and K otherwise.
Tensor curvature_tensor(const LieAlgebra &alg, const Connection &conn,
                        const StructurePack &s);

/// ρ(y,z) = g^{ij} L(e_i, y, z, e_j)
Tensor ricci(const Tensor &L, const StructurePack &s);

/// τ = g^{ij} ρ(e_i, e_j)
Scalar scalar_curv(const Tensor &rho, const StructurePack &s);

/// L(x,y,z,w) = -L(y,x,z,w) = -L(x,y,w,z)
CheckOutcome curvature_antisymmetry_check(const Tensor &L);

/// 𝔖_{x,y,z} L(x,y,z,w) = 0
CheckOutcome bianchi_check(const Tensor &L);

/// L(x,y,φz,φw) = -L(x,y,z,w)
CheckOutcome phi_property_check(const Tensor &L, const StructurePack &s);

/// Curvature-like (antisymmetries and Bianchi) and the φ-property.
CheckOutcome phi_kaehler_check(const Tensor &L, const StructurePack &s);

/// K = R + 1/2(D_xT)(y,z,w) - 1/2(D_yT)(x,z,w) + 1/4 g(T(x,y),T(z,w))
///       + 1/4 𝔖 g(T(x,y),T(z,w)), with DT = covariant_derivative(D, T).
CheckOutcome krt_identity_check(const Tensor &R, const Tensor &K,
                                const Tensor &DT, const Tensor &T,
                                const StructurePack &s);

/// τ^D = τ - 1/4 ‖T‖²
CheckOutcome tdt_check(const Scalar &tau, const Scalar &tauD,
                       const Scalar &normT);

/// K = R + 1/4 g(T(x,y),T(z,w)) - 1/12 𝔖 g(T(x,y),T(z,w))
CheckOutcome kr_sT_form_check(const Tensor &R, const Tensor &K,
                              const Tensor &T, const StructurePack &s);

/// K = R + 1/4 g(T(x,y),T(z,w)) + 1/4 𝔖 g(T(x,y),T(z,w))
CheckOutcome kr_dt0_check(const Tensor &R, const Tensor &K, const Tensor &T,
                          const StructurePack &s);

/// K = R - 1/2(D_zT)(x,y,w) - 1/4 g(T(y,z),T(x,w)) - 1/4 g(T(z,x),T(y,w))
CheckOutcome krdt_check(const Tensor &R, const Tensor &K, const Tensor &DT,
                        const Tensor &T, const StructurePack &s);

/// 𝔖(D_xT)(y,z,w) = -𝔖 g(T(x,y),T(z,w))
CheckOutcome dtgt_check(const Tensor &DT, const Tensor &T,
                        const StructurePack &s);

/// 𝔖 K(x,y,z,w) = 𝔖(D_xT)(y,z,w) + 𝔖 g(T(x,y),T(z,w))
CheckOutcome torsion_bianchi_check(const Tensor &K, const Tensor &DT,
                                   const Tensor &T, const StructurePack &s);

/// R(x,y,φz,φw) = -R(x,y,z,w) - 1/4 g(T(x,y), T(z,w) + T(φz,φw)) and
/// R(x,y,z,ξ) = 1/2 g(T(x,y), ∇_zξ); expected when DT = 0 and K is of
/// φ-Kähler type.
CheckOutcome r_torsion_check(const Tensor &R, const Tensor &T,
                             const Connection &nabla, const StructurePack &s);

struct DParallelEquivalences {
  /// dT = 0 for the expression built from D, T and g(T, T).
  bool closed_T = false;
  /// dT = 0 for the Chevalley-Eilenberg differential.
  bool closed_T_ce = false;
  bool sigma_TT_zero = false;
  /// K is of φ-Kähler type and K = R + 1/4 g(T(x,y),T(z,w)).
  bool K_form3 = false;
};

/// nullopt when D T != 0 (the equivalences do not apply).
std::optional<DParallelEquivalences>
dparallel_equivalences(const LieAlgebra &alg, const Tensor &DT,
                       const Tensor &T, const Tensor &R, const Tensor &K,
                       const StructurePack &s);

/// Identities for the vertical class; requires F7 (ClassGateError
/// "input not in class F₇"). Conditional identities are gated on their
/// hypotheses.
std::vector<CheckResult> f7_formula_suite(const LieAlgebra &alg,
                                          const StructurePack &s,
                                          const Connection &nabla,
                                          const Connection &D, const Tensor &R,
                                          const Tensor &K, const Tensor &T);

/// Identities for the horizontal class; requires F3 (ClassGateError
/// "input not in class F₃").
std::vector<CheckResult> f3_formula_suite(const LieAlgebra &alg,
                                          const StructurePack &s,
                                          const Connection &nabla,
                                          const Connection &D, const Tensor &R,
                                          const Tensor &K, const Tensor &T);

struct EinsteinResult {
  bool einstein = false;
  /// ρ = c g when einstein holds.
  std::optional<Scalar> constant;
  /// Monic polynomials whose common zeros are the Einstein parameters.
  std::vector<Scalar> obstructions;
};

/// Decides ρ = c g for one Scalar c. Symbolic inputs yield the obstruction
/// polynomials of ρ - c g with c read off a constant entry of g.
EinsteinResult einstein_check(const Tensor &rho, const StructurePack &s);

} // namespace acbm
