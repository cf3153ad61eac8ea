#pragma once

#include "acbm/check.hpp"
#include "acbm/linalg.hpp"

#include <array>
#include <functional>
#include <span>
#include <string>

namespace acbm {

enum class TensorRole { F, N, T, R, K, rho, rhoD, d_eta, dT, generic };

std::string to_string(TensorRole role);

/// Dense, fully covariant component table t(E_{i1}, ..., E_{ip}).
class Tensor {
public:
  using Index = std::vector<std::size_t>;

  Tensor() = default;
  Tensor(std::size_t dim, std::size_t valence,
         TensorRole role = TensorRole::generic);

  /// Re-tags the tensor and validates the symmetries implied by `role`;
  /// throws ValidationError on violation.
  Tensor with_role(TensorRole role) const;

  std::size_t dim() const { return dim_; }
  std::size_t valence() const { return valence_; }
  TensorRole role() const { return role_; }
  std::size_t size() const { return comps_.size(); }

  template <typename... I> Scalar &operator()(I... idx) {
    static_assert(sizeof...(I) > 0);
    const std::array<std::size_t, sizeof...(I)> ix{
        static_cast<std::size_t>(idx)...};
    return comps_[flat(ix)];
  }
  template <typename... I> const Scalar &operator()(I... idx) const {
    static_assert(sizeof...(I) > 0);
    const std::array<std::size_t, sizeof...(I)> ix{
        static_cast<std::size_t>(idx)...};
    return comps_[flat(ix)];
  }
  Scalar &at(std::span<const std::size_t> idx) { return comps_[flat(idx)]; }
  const Scalar &at(std::span<const std::size_t> idx) const {
    return comps_[flat(idx)];
  }

  /// Component storage, row-major over the index tuple.
  const std::vector<Scalar> &comps() const { return comps_; }
  Index unflatten(std::size_t flat_index) const;

  bool is_zero() const;

  /// Multilinear evaluation on arbitrary vectors.
  Scalar eval(std::span<const Vector> args) const;

  Tensor substitute(const Assignment &assignment) const;

  Tensor &operator+=(const Tensor &o);
  Tensor &operator-=(const Tensor &o);
  friend Tensor operator+(Tensor a, const Tensor &b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor &b) { return a -= b; }
  friend Tensor operator*(const Scalar &s, const Tensor &t);
  Tensor operator-() const;

  friend bool operator==(const Tensor &a, const Tensor &b) {
    return a.dim_ == b.dim_ && a.valence_ == b.valence_ && a.comps_ == b.comps_;
  }

  /// Fills every component from f(index).
  static Tensor generate(std::size_t dim, std::size_t valence,
                         const std::function<Scalar(const Index &)> &f,
                         TensorRole role = TensorRole::generic);

private:
  std::size_t flat(std::span<const std::size_t> idx) const;

  std::size_t dim_ = 0;
  std::size_t valence_ = 0;
  TensorRole role_ = TensorRole::generic;
  std::vector<Scalar> comps_;
};

/// Componentwise comparison; the witness is the first differing index tuple
/// in lexicographic order.
CheckOutcome compare(const Tensor &lhs, const Tensor &rhs);

/// result(..., i, ...) = t(..., M E_i, ...) with M acting in `slot`.
Tensor apply_slot(const Tensor &t, std::size_t slot, const Matrix &m);

/// result(i_0, ..., i_{p-1}) = t(i_{perm[0]}, ..., i_{perm[p-1]}).
Tensor permute(const Tensor &t, std::span<const std::size_t> perm);

/// Cyclic sum over the first three slots.
Tensor cyclic_sum3(const Tensor &t);

/// (a ⊗ b)(x..., y...) = a(x...) b(y...).
Tensor tensor_product(const Tensor &a, const Tensor &b);

/// Wedge product with the shuffle-sum normalization:
/// (α∧β)(x_1..x_{p+q}) = Σ_{(p,q)-shuffles σ} sgn σ α(x_σ(1)..) β(..).
Tensor wedge(const Tensor &a, const Tensor &b);

/// True when t changes sign under every transposition of slots.
CheckOutcome alternating_check(const Tensor &t);

/// Covector as a valence-1 tensor and back.
Tensor covector(const Vector &v);
/// Valence-2 tensor from a matrix m[i][j].
Tensor from_matrix(const Matrix &m, TensorRole role = TensorRole::generic);

/// Full contraction of t with itself through g^{-1} in every slot.
Scalar square_norm(const Tensor &t, const Matrix &g_inv);

} // namespace acbm
