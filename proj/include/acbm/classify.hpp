#pragma once

#include "acbm/levicivita.hpp"

#include <utility>

namespace acbm {

/// Membership in the classes that have explicit defining conditions.
/// Symbolic inputs are decided as polynomial identities.
struct ClassMembership {
  bool F0 = false;
  bool F3 = false;
  bool F7 = false;
  bool F3plusF7 = false;
};

/// The most specific of F0, F3, F7, F3+F7, or "none".
std::string most_specific_class(const ClassMembership &m);

/// F(x,y,z) = F(x,z,y) = F(x,φy,φz) + η(y)F(x,ξ,z) + η(z)F(x,y,ξ)
CheckOutcome F_symmetry_check(const Tensor &F, const StructurePack &s);

/// 𝔖 F = 0
CheckOutcome cyclic_F_check(const Tensor &F);

/// 𝔖 F = 0, F(ξ,y,z) = F(x,y,ξ) = 0
CheckOutcome F3_condition_check(const Tensor &F, const StructurePack &s);

/// 𝔖 F = 0, F(x,y,z) = -F(φx,φy,z) - F(φx,y,φz)
CheckOutcome F7_condition_check(const Tensor &F, const StructurePack &s);

ClassMembership class_membership(const Tensor &F, const StructurePack &s,
                                 const Connection &nabla);

/// Throws ClassGateError("φKT-connection does not exist") unless the input
/// has Killing ξ and 𝔖F = 0.
void require_F3plusF7(const Tensor &F, const StructurePack &s,
                      const Connection &nabla);

/// N(x,y,z) from F:
/// F(φx,y,z) - F(φy,x,z) - F(x,y,φz) + F(y,x,φz)
///   + F(x,φy,ξ)η(z) - F(y,φx,ξ)η(z)
Tensor nijenhuis(const Tensor &F, const StructurePack &s);

/// g([φ,φ](x,y) + dη(x,y)ξ, z) with
/// [φ,φ](x,y) = [φx,φy] + φ²[x,y] - φ[φx,y] - φ[x,φy].
Tensor nijenhuis_bracket(const LieAlgebra &alg, const StructurePack &s);

/// Horizontal and vertical parts: v(x,y,z) = N(x,y,ξ)η(z), h = N - v.
std::pair<Tensor, Tensor> nijenhuis_hv_split(const Tensor &N,
                                             const StructurePack &s);

/// The vector-valued Nijenhuis forms on F3+F7, lowered with g:
/// full(x,y) = 2(∇_{φx}φ)y - 2φ(∇_xφ)y + 2(∇_xη)y ξ,
/// horizontal(x,y) = -2φ²(∇_{φx}φ)y - 2φ(∇_xφ)y,
/// vertical(x,y) = 4(∇_xη)y ξ.
struct NijenhuisForms {
  Tensor full;
  Tensor horizontal;
  Tensor vertical;
};
NijenhuisForms nijenhuis_forms(const StructurePack &s, const Connection &nabla);

/// Bracket conditions for a non-Abelian structure.
struct LieClassConditions {
  bool F3 = false;
  bool F7 = false;
  bool F0 = false;
};

/// Throws ClassGateError("structure is not non-Abelian") when
/// [φX,φY] = -[X,Y] fails.
LieClassConditions lie_class_conditions(const LieAlgebra &alg,
                                        const StructurePack &s);

/// 2F(X,Y,Z) = g([X,φY] - φ[X,Y], Z) + g([X,φZ] - φ[X,Z], Y) for
/// non-Abelian structures.
CheckOutcome two_F_bracket_check(const LieAlgebra &alg, const StructurePack &s,
                                 const Tensor &F);

/// Zero square norm of ∇φ.
bool isotropic_F0_check(const Scalar &norm);

} // namespace acbm
