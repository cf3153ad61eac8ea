#include "acbm/liealg.hpp"

#include "acbm/structure.hpp"

namespace acbm {

LieAlgebra::LieAlgebra(std::size_t dim, ParamSpacePtr params)
    : dim_(dim), params_(std::move(params)), c_(dim * dim * dim) {
  if (dim == 0)
    throw std::invalid_argument("dimension must be positive");
}

LieAlgebra LieAlgebra::from_constants(
    std::size_t dim, ParamSpacePtr params,
    const std::vector<std::vector<Vector>> &constants) {
  LieAlgebra alg(dim, std::move(params));
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar &v = constants.at(i).at(j).at(k);
        if (v != -constants.at(j).at(i).at(k) && violations.empty())
          violations.push_back("structure constants not antisymmetric at (" +
                                std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "," +
                                std::to_string(k + 1) + ")");
        alg.c_[(i * dim + j) * dim + k] = v;
      }
  if (!violations.empty())
    throw ValidationError(violations);
  return alg;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector &value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_)
    throw std::invalid_argument("dimension mismatch");
  if (i == j) {
    if (!acbm::is_zero(value))
      throw std::invalid_argument("[E_i, E_i] must vanish");
    return;
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    c_[(i * dim_ + j) * dim_ + k] = value[k];
    c_[(j * dim_ + i) * dim_ + k] = -value[k];
  }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    v[k] = c(i, j, k);
  return v;
}

LieAlgebra LieAlgebra::substitute(const Assignment &assignment) const {
  LieAlgebra r = *this;
  for (auto &x : r.c_)
    x = x.substitute(assignment);
  return r;
}

bool LieAlgebra::is_abelian() const {
  for (const auto &x : c_)
    if (!x.is_zero())
      return false;
  return true;
}

Vector bracket(const LieAlgebra &alg, const Vector &x, const Vector &y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("dimension mismatch");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j)
        continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!alg.c(i, j, k).is_zero())
          r[k] += xy * alg.c(i, j, k);
    }
  }
  return r;
}

CheckOutcome jacobi_check(const LieAlgebra &alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar sum;
          for (std::size_t m = 0; m < n; ++m) {
            sum += alg.c(i, j, m) * alg.c(m, k, l);
            sum += alg.c(j, k, m) * alg.c(m, i, l);
            sum += alg.c(k, i, m) * alg.c(m, j, l);
          }
          if (!sum.is_zero())
            return CheckOutcome::fail({{i, j, k, l}, sum, Scalar()});
        }
  return CheckOutcome::pass();
}

CheckOutcome non_abelian_structure_check(const LieAlgebra &alg,
                                         const StructurePack &s) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs =
          bracket(alg, s.phi_of(basis_vector(n, i)), s.phi_of(basis_vector(n, j)));
      const Vector rhs = alg.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != -rhs[k])
          return CheckOutcome::fail({{i, j, k}, lhs[k], -rhs[k]});
    }
  return CheckOutcome::pass();
}

} // namespace acbm
