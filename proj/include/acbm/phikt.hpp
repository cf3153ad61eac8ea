#pragma once

#include "acbm/classify.hpp"

namespace acbm {

/// T(x,y,z) = -1/2 𝔖{F(x,y,φz) - 3η(x)F(y,φz,ξ)}.
/// Throws ClassGateError("φKT-connection does not exist") outside F3+F7.
Tensor torsion_T37(const StructurePack &s, const Connection &nabla,
                   const Tensor &F);

/// (η∧dη)(x,y,z) + 1/4 𝔖 N(x,y,z), same class gate as torsion_T37.
Tensor torsion_T37_wedge(const LieAlgebra &alg, const StructurePack &s,
                         const Connection &nabla, const Tensor &F,
                         const Tensor &N);

/// g(T(x,y), z) with the vector form
/// T(x,y) = 1/2{2(∇_xφ)φy - (∇_yφ)φx + (∇_{φy}φ)x
///              + 3η(x)∇_yξ - 4η(y)∇_xξ + 2(∇_xη)y ξ}.
Tensor torsion_T37a_lowered(const StructurePack &s, const Connection &nabla);

/// T(x,y) = 1/2{2(∇_xφ)φy - (∇_yφ)φx + (∇_{φy}φ)x}, lowered.
/// Throws ClassGateError("input not in class F₃") outside F3.
Tensor torsion_T3(const StructurePack &s, const Connection &nabla,
                  const Tensor &F);

/// T(x,y) = 2{η(x)∇_yξ - η(y)∇_xξ + (∇_xη)y ξ}, lowered.
/// Throws ClassGateError("input not in class F₇") outside F7.
Tensor torsion_T7(const StructurePack &s, const Connection &nabla,
                  const Tensor &F);

/// 2𝔖{η(x)F(y,φz,ξ)}
Tensor torsion_T7_cyclic(const StructurePack &s, const Tensor &F);

/// (η∧dη)(x,y,z) with dη from the Chevalley-Eilenberg differential.
Tensor eta_wedge_deta(const LieAlgebra &alg, const StructurePack &s);

/// D = ∇ + 1/2 g^{-1}T without checks.
Connection make_D(const Connection &nabla, const Tensor &T,
                  const StructurePack &s);

/// D = ∇ + 1/2 g^{-1}T. Throws ValidationError if T is not a 3-form, if D
/// is not natural, or if the torsion of D differs from T.
Connection build_D(const LieAlgebra &alg, const StructurePack &s,
                   const Connection &nabla, const Tensor &T);

/// With Q = T/2: Q(x,y,φz) - Q(x,φy,z) = F(x,y,z).
CheckOutcome theorem1a_check(const Tensor &T, const Tensor &F,
                             const StructurePack &s);
/// With Q = T/2: Q(x,y,z) = -Q(x,z,y).
CheckOutcome theorem1b_check(const Tensor &T);
CheckOutcome theorem1_check(const Tensor &T, const Tensor &F,
                            const StructurePack &s);

/// T(x,y,φz) - T(x,φy,z) = 2F(x,y,z)
CheckOutcome ttf_check(const Tensor &T, const Tensor &F,
                       const StructurePack &s);

/// T(x,φy) = φT(x,y) - 2(∇_xφ)y and T(φx,y) = φT(x,y) + 2(∇_yφ)x.
CheckOutcome corollary_TKT_check(const Tensor &T, const Connection &nabla,
                                 const StructurePack &s);

/// N(x,y,z) = T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) - T(φx,φy,z)
CheckOutcome lemma_NT_check(const Tensor &T, const Tensor &N,
                            const StructurePack &s);

/// 𝔖N(x,y,z) = 3T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) + T(φx,φy,z)
CheckOutcome sNT_check(const Tensor &T, const Tensor &N,
                       const StructurePack &s);

/// dη(x,y) = 2(∇_xη)y = T(x,y,ξ) = 2F(x,φy,ξ)
CheckOutcome deta_T_check(const LieAlgebra &alg, const StructurePack &s,
                          const Connection &nabla, const Tensor &T,
                          const Tensor &F);

/// g^{ij} g^{ks} g(T(e_i,e_k), T(e_j,e_s))
Scalar norm_T(const Tensor &T, const StructurePack &s);

/// G(x,y,z,w) = g(T(x,y), T(z,w))
Tensor gTT(const Tensor &T, const StructurePack &s);

/// 𝔖_{x,y,z} g(T(x,y), T(z,w))
Tensor sigma_gTT(const Tensor &T, const StructurePack &s);

/// 𝔖_{x,y,z}(D_xT)(y,z,w) - (D_wT)(x,y,z) + 2𝔖_{x,y,z} g(T(x,y),T(z,w)),
/// from DT = covariant_derivative(D, T).
Tensor torsion_differential_via_D(const Tensor &DT, const Tensor &T,
                                  const StructurePack &s);

/// Bundle of the φKT data for an input in F3+F7.
struct PhiKT {
  Connection nabla;
  Tensor F;
  Tensor T;
  Connection D;
};

/// Levi-Civita, F, T from the cyclic formula and D; class-gated.
PhiKT phikt_connection(const LieAlgebra &alg, const StructurePack &s);

} // namespace acbm
