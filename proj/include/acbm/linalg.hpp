#pragma once

#include "acbm/exact.hpp"

#include <optional>
#include <vector>

namespace acbm {

/// Coefficients over the basis {E_1, ..., E_dim}.
using Vector = std::vector<Scalar>;
/// Row-major square matrix; m[i][j] is row i, column j.
using Matrix = std::vector<Vector>;

Vector zero_vector(std::size_t dim);
Vector basis_vector(std::size_t dim, std::size_t i);
Matrix zero_matrix(std::size_t dim);
Matrix identity_matrix(std::size_t dim);

Vector add(const Vector &a, const Vector &b);
Vector sub(const Vector &a, const Vector &b);
Vector scale(const Scalar &s, const Vector &v);
bool is_zero(const Vector &v);

/// m * v
Vector apply(const Matrix &m, const Vector &v);
Matrix multiply(const Matrix &a, const Matrix &b);
Matrix transpose(const Matrix &m);

/// a^T m b
Scalar bilinear(const Matrix &m, const Vector &a, const Vector &b);
/// Σ c_i v_i
Scalar dot(const Vector &c, const Vector &v);

/// Determinant by fraction-free elimination.
Scalar determinant(const Matrix &m);

/// Exact inverse, or nullopt when the matrix is singular. Throws
/// std::domain_error when the inverse exists only over rational functions.
std::optional<Matrix> inverse(const Matrix &m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric matrix with rational entries, by
/// congruence diagonalization.
Inertia inertia(const Matrix &symmetric);

} // namespace acbm
