#include "acbm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace acbm {

Vector zero_vector(std::size_t dim) { return Vector(dim); }

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = Scalar(1);
  return v;
}

Matrix zero_matrix(std::size_t dim) { return Matrix(dim, Vector(dim)); }

Matrix identity_matrix(std::size_t dim) {
  Matrix m = zero_matrix(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m[i][i] = Scalar(1);
  return m;
}

Vector add(const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dimension mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

Vector sub(const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dimension mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

Vector scale(const Scalar &s, const Vector &v) {
  Vector r(v.size());
  if (s.is_zero())
    return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      r[i] = s * v[i];
  return r;
}

bool is_zero(const Vector &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

Vector apply(const Matrix &m, const Vector &v) {
  if (m.size() != v.size())
    throw std::invalid_argument("dimension mismatch");
  Vector r(m.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero())
      continue;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!m[i][j].is_zero())
        r[i] += m[i][j] * v[j];
  }
  return r;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
  const std::size_t n = a.size();
  Matrix r = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero())
          r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Matrix transpose(const Matrix &m) {
  Matrix r = zero_matrix(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      r[j][i] = m[i][j];
  return r;
}

Scalar bilinear(const Matrix &m, const Vector &a, const Vector &b) {
  return dot(a, apply(m, b));
}

Scalar dot(const Vector &c, const Vector &v) {
  if (c.size() != v.size())
    throw std::invalid_argument("dimension mismatch");
  Scalar r;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero() && !v[i].is_zero())
      r += c[i] * v[i];
  return r;
}

namespace {

// Fraction-free Gauss-Jordan on [m | I].
struct Bareiss {
  Scalar det;
  Matrix adj;
  bool singular = false;
};

Bareiss bareiss(const Matrix &m) {
  const std::size_t n = m.size();
  Matrix a(n, Vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m[i][j];
    a[i][n + i] = Scalar(1);
  }
  Scalar prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero())
      ++p;
    if (p == n)
      return {Scalar(), {}, true};
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k)
        continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k)
          continue;
        Scalar num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = Scalar::divide_exact(num, prev);
        if (!q)
          throw std::logic_error("fraction-free elimination lost exactness");
        a[i][j] = *q;
      }
      a[i][k] = Scalar();
    }
    prev = a[k][k];
  }
  // Every diagonal entry now equals the last pivot d = sign * det, and the
  // right block is d * m^{-1}; hence adj(m) = sign * right block.
  Bareiss out;
  out.det = sign > 0 ? prev : -prev;
  out.adj = Matrix(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.adj[i][j] = sign > 0 ? a[i][n + j] : -a[i][n + j];
  return out;
}

} // namespace

Scalar determinant(const Matrix &m) {
  if (m.empty())
    return Scalar(1);
  auto b = bareiss(m);
  return b.singular ? Scalar() : b.det;
}

std::optional<Matrix> inverse(const Matrix &m) {
  auto b = bareiss(m);
  if (b.singular || b.det.is_zero())
    return std::nullopt;
  if (!b.det.is_constant())
    throw std::domain_error("determinant " + b.det.str() +
                            " is not constant; inverse is not polynomial");
  const Rational inv_det = 1 / b.det.constant_value();
  Matrix r = b.adj;
  for (auto &row : r)
    for (auto &x : row)
      x = x * Scalar(inv_det);
  return r;
}

Inertia inertia(const Matrix &symmetric) {
  const std::size_t n = symmetric.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = symmetric[i][j].constant_value();

  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0)
      ++p;
    if (p == n) {
      // No nonzero diagonal pivot: combine rows/cols k and j with a[k][j] != 0.
      std::size_t j = k + 1;
      while (j < n && a[k][j] == 0)
        ++j;
      if (j == n) {
        ++out.zero;
        continue;
      }
      for (std::size_t t = 0; t < n; ++t)
        a[k][t] += a[j][t];
      for (std::size_t t = 0; t < n; ++t)
        a[t][k] += a[t][j];
      p = k;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto &row : a)
        std::swap(row[p], row[k]);
    }
    const Rational pivot = a[k][k];
    (pivot > 0 ? out.positive : out.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0)
        continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t t = k; t < n; ++t)
        a[i][t] -= f * a[k][t];
      for (std::size_t t = k; t < n; ++t)
        a[t][i] = a[i][t];
    }
  }
  return out;
}

} // namespace acbm
