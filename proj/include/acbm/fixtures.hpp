#pragma once

#include "acbm/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acbm::fixtures {

struct Fixture {
  LieAlgebra alg;
  StructurePack s;
};

/// Parameter names of the five-dimensional family, in order
/// (λ1, λ2, λ3, λ4, μ1, μ2).
const std::vector<std::string> &family_param_names();

/// The five-dimensional family with symbolic parameters.
Fixture paper_family();

/// The family specialized at rational values (l1, l2, l3, l4, m1, m2); the
/// result lives over an empty parameter space.
Fixture paper_family(const std::vector<Rational> &values);
Fixture paper_family(const Assignment &values);

/// φ, ξ, η and g of the family with all brackets zero.
Fixture abelian_fixture();

/// The family at (1, 0, 1, 0, 1, -1): Ricci-flat and isotropic-F0.
Fixture einstein_instance();

/// The family at (1, 0, 0, 0, 1, 0).
Fixture fix_c();

/// Antisymmetric constants [E1,E2]=E3, [E1,E3]=E2, [E2,E3]=E2 that
/// violate Jacobi; the structure is that of the family.
Fixture non_jacobi();

/// [E5,E1]=E1 only: ξ is not Killing, so the input lies outside F3+F7.
Fixture non_killing();

/// [E1,E2]=E5 only: the non-Abelian condition fails.
Fixture broken_non_abelian();

/// The family with g(E5,E5) = -1 (and η left unchanged).
Fixture flipped_metric();

/// Names accepted by fixture_by_name.
const std::vector<std::string> &fixture_names();
std::optional<Fixture> fixture_by_name(const std::string &name);

} // namespace acbm::fixtures
