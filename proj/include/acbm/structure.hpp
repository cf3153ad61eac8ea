#pragma once

#include "acbm/liealg.hpp"
#include "acbm/tensor.hpp"

#include <string>
#include <vector>

namespace acbm {

/// Invariant almost contact structure (φ, ξ, η) with a metric g.
/// phi[i][j] is the E_i coefficient of φE_j.
struct StructurePack {
  Matrix phi;
  Vector xi;
  Vector eta;
  Matrix g;
  Matrix g_inv;

  std::size_t dim() const { return xi.size(); }

  Vector phi_of(const Vector &x) const { return acbm::apply(phi, x); }
  Scalar eta_of(const Vector &x) const { return dot(eta, x); }
  Scalar metric(const Vector &x, const Vector &y) const {
    return bilinear(g, x, y);
  }
  /// g(x, ·) as a covector.
  Vector lower(const Vector &x) const { return acbm::apply(transpose(g), x); }
  /// The vector v with g(v, ·) = w.
  Vector raise(const Vector &covec) const { return acbm::apply(g_inv, covec); }

  StructurePack substitute(const Assignment &assignment) const;

  friend bool operator==(const StructurePack &a, const StructurePack &b) {
    return a.phi == b.phi && a.xi == b.xi && a.eta == b.eta && a.g == b.g;
  }
};

/// Assembles a pack and computes g^{-1}. Throws ValidationError
/// ("degenerate metric") when g is singular.
StructurePack make_structure(Matrix phi, Vector xi, Vector eta, Matrix g);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  /// Informational remarks, e.g. a skipped signature check.
  std::vector<std::string> notes;

  explicit operator bool() const { return ok; }
};

/// Checks φξ = 0, φ² = -Id + η⊗ξ, η∘φ = 0, η(ξ) = 1, the B-metric relation
/// g(φx, φy) = -g(x, y) + η(x)η(y), symmetry of g, g g^{-1} = Id,
/// η = g(·, ξ), odd dimension, and (for rational g) signature (n, n+1).
ValidationReport validate_structure(const LieAlgebra &alg,
                                    const StructurePack &s);

/// Throws ValidationError unless validate_structure passes.
void require_valid(const LieAlgebra &alg, const StructurePack &s);

/// g̃(x, y) = g(x, φy) + η(x)η(y).
Matrix associated_metric(const StructurePack &s);

/// h(x) = -φ²x
Vector project_h(const StructurePack &s, const Vector &x);
/// v(x) = η(x)ξ
Vector project_v(const StructurePack &s, const Vector &x);

/// η as a valence-1 tensor, g as a valence-2 tensor.
Tensor eta_tensor(const StructurePack &s);
Tensor metric_tensor(const StructurePack &s);

/// True when every entry of alg and s is a rational constant.
bool is_rational(const LieAlgebra &alg, const StructurePack &s);

} // namespace acbm
