#pragma once

#include "acbm/check.hpp"
#include "acbm/linalg.hpp"

namespace acbm {

struct StructurePack;

/// Real Lie algebra with exact structure constants over a fixed basis.
/// c(i, j, k) is the coefficient of E_k in [E_i, E_j]; the table is stored
/// in full and kept antisymmetric.
class LieAlgebra {
public:
  LieAlgebra() = default;
  /// Abelian algebra of the given dimension.
  LieAlgebra(std::size_t dim, ParamSpacePtr params);

  /// Builds from a full table c[i][j][k]; throws ValidationError unless the
  /// table is antisymmetric in (i, j).
  static LieAlgebra from_constants(
      std::size_t dim, ParamSpacePtr params,
      const std::vector<std::vector<Vector>> &constants);

  std::size_t dim() const { return dim_; }
  const ParamSpacePtr &params() const { return params_; }

  const Scalar &c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets [E_i, E_j] = value and [E_j, E_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector &value);
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  /// Entrywise substitution of parameter values.
  LieAlgebra substitute(const Assignment &assignment) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  std::size_t dim_ = 0;
  ParamSpacePtr params_;
  std::vector<Scalar> c_;
};

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebra &alg, const Vector &x, const Vector &y);

/// Jacobi identity as a polynomial identity. The witness is (i, j, k, l)
/// with lhs the E_l coefficient of the cyclic double bracket.
CheckOutcome jacobi_check(const LieAlgebra &alg);

/// [φE_i, φE_j] = -[E_i, E_j] for all basis pairs.
CheckOutcome non_abelian_structure_check(const LieAlgebra &alg,
                                         const StructurePack &s);

} // namespace acbm
