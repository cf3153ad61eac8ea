#include "acbm/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace acbm {

std::string to_string(TensorRole role) {
  switch (role) {
  case TensorRole::F: return "F";
  case TensorRole::N: return "N";
  case TensorRole::T: return "T";
  case TensorRole::R: return "R";
  case TensorRole::K: return "K";
  case TensorRole::rho: return "rho";
  case TensorRole::rhoD: return "rhoD";
  case TensorRole::d_eta: return "d_eta";
  case TensorRole::dT: return "dT";
  case TensorRole::generic: return "generic";
  }
  return "generic";
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i)
    r *= base;
  return r;
}

std::string index_str(const Tensor::Index &idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i)
    s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + ")";
}

// Symmetry t(idx) = sign * t(idx with slots a, b swapped).
CheckOutcome slot_symmetry(const Tensor &t, std::size_t a, std::size_t b,
                           int sign) {
  for (std::size_t f = 0; f < t.size(); ++f) {
    auto idx = t.unflatten(f);
    auto swapped = idx;
    std::swap(swapped[a], swapped[b]);
    const Scalar &lhs = t.comps()[f];
    Scalar rhs = sign > 0 ? t.at(swapped) : -t.at(swapped);
    if (lhs != rhs)
      return CheckOutcome::fail({idx, lhs, rhs});
  }
  return CheckOutcome::pass();
}

} // namespace

Tensor::Tensor(std::size_t dim, std::size_t valence, TensorRole role)
    : dim_(dim), valence_(valence), role_(role), comps_(ipow(dim, valence)) {}

std::size_t Tensor::flat(std::span<const std::size_t> idx) const {
  if (idx.size() != valence_)
    throw std::invalid_argument("index arity does not match valence");
  std::size_t f = 0;
  for (auto i : idx) {
    if (i >= dim_)
      throw std::out_of_range("tensor index out of range");
    f = f * dim_ + i;
  }
  return f;
}

Tensor::Index Tensor::unflatten(std::size_t flat_index) const {
  Index idx(valence_);
  for (std::size_t k = valence_; k-- > 0;) {
    idx[k] = flat_index % dim_;
    flat_index /= dim_;
  }
  return idx;
}

Tensor Tensor::with_role(TensorRole role) const {
  Tensor t = *this;
  t.role_ = role;
  std::vector<std::string> violations;
  auto need = [&](const CheckOutcome &o, const std::string &what) {
    if (!o.ok)
      violations.push_back(to_string(role) + " violates " + what + " at " +
                           index_str(o.witness->indices));
  };
  switch (role) {
  case TensorRole::T:
  case TensorRole::d_eta:
  case TensorRole::dT:
    need(alternating_check(t), "total skew-symmetry");
    break;
  case TensorRole::N:
    if (valence_ != 3)
      violations.push_back("N must have valence 3");
    else
      need(slot_symmetry(t, 0, 1, -1), "antisymmetry in (x,y)");
    break;
  case TensorRole::F:
    if (valence_ != 3)
      violations.push_back("F must have valence 3");
    else
      need(slot_symmetry(t, 1, 2, +1), "F(x,y,z) = F(x,z,y)");
    break;
  case TensorRole::R:
  case TensorRole::K:
    if (valence_ != 4) {
      violations.push_back(to_string(role) + " must have valence 4");
    } else {
      need(slot_symmetry(t, 0, 1, -1), "L(x,y,z,w) = -L(y,x,z,w)");
      need(slot_symmetry(t, 2, 3, -1), "L(x,y,z,w) = -L(x,y,w,z)");
    }
    break;
  case TensorRole::rho:
  case TensorRole::rhoD:
    if (valence_ != 2)
      violations.push_back("Ricci tensor must have valence 2");
    break;
  case TensorRole::generic:
    break;
  }
  if (!violations.empty())
    throw ValidationError(violations);
  return t;
}

bool Tensor::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const Scalar &s) { return s.is_zero(); });
}

Scalar Tensor::eval(std::span<const Vector> args) const {
  if (args.size() != valence_)
    throw std::invalid_argument("argument count does not match valence");
  // Sparse expansion over the nonzero coordinates of each argument.
  std::vector<std::vector<std::size_t>> support(valence_);
  for (std::size_t a = 0; a < valence_; ++a) {
    if (args[a].size() != dim_)
      throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < dim_; ++i)
      if (!args[a][i].is_zero())
        support[a].push_back(i);
    if (support[a].empty())
      return Scalar();
  }
  Scalar total;
  Index idx(valence_);
  std::vector<std::size_t> pos(valence_, 0);
  for (;;) {
    for (std::size_t a = 0; a < valence_; ++a)
      idx[a] = support[a][pos[a]];
    const Scalar &c = at(idx);
    if (!c.is_zero()) {
      Scalar term = c;
      for (std::size_t a = 0; a < valence_; ++a)
        term *= args[a][idx[a]];
      total += term;
    }
    std::size_t a = valence_;
    while (a > 0) {
      --a;
      if (++pos[a] < support[a].size())
        break;
      pos[a] = 0;
      if (a == 0)
        return total;
    }
    if (valence_ == 0)
      return total;
  }
}

Tensor Tensor::substitute(const Assignment &assignment) const {
  Tensor t = *this;
  for (auto &c : t.comps_)
    c = c.substitute(assignment);
  return t;
}

Tensor &Tensor::operator+=(const Tensor &o) {
  if (o.dim_ != dim_ || o.valence_ != valence_)
    throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i)
    comps_[i] += o.comps_[i];
  role_ = TensorRole::generic;
  return *this;
}

Tensor &Tensor::operator-=(const Tensor &o) {
  if (o.dim_ != dim_ || o.valence_ != valence_)
    throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i)
    comps_[i] -= o.comps_[i];
  role_ = TensorRole::generic;
  return *this;
}

Tensor operator*(const Scalar &s, const Tensor &t) {
  Tensor r = t;
  r.role_ = TensorRole::generic;
  for (auto &c : r.comps_)
    c = s.is_zero() ? Scalar() : s * c;
  return r;
}

Tensor Tensor::operator-() const {
  Tensor r = *this;
  r.role_ = TensorRole::generic;
  for (auto &c : r.comps_)
    c = -c;
  return r;
}

Tensor Tensor::generate(std::size_t dim, std::size_t valence,
                        const std::function<Scalar(const Index &)> &f,
                        TensorRole role) {
  Tensor t(dim, valence);
  for (std::size_t i = 0; i < t.comps_.size(); ++i)
    t.comps_[i] = f(t.unflatten(i));
  return role == TensorRole::generic ? t : t.with_role(role);
}

CheckOutcome compare(const Tensor &lhs, const Tensor &rhs) {
  if (lhs.dim() != rhs.dim() || lhs.valence() != rhs.valence())
    throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t f = 0; f < lhs.size(); ++f)
    if (lhs.comps()[f] != rhs.comps()[f])
      return CheckOutcome::fail({lhs.unflatten(f), lhs.comps()[f], rhs.comps()[f]});
  return CheckOutcome::pass();
}

Tensor apply_slot(const Tensor &t, std::size_t slot, const Matrix &m) {
  const std::size_t n = t.dim();
  return Tensor::generate(n, t.valence(), [&](const Tensor::Index &idx) {
    Scalar s;
    auto j = idx;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar &mk = m[k][idx[slot]];
      if (mk.is_zero())
        continue;
      j[slot] = k;
      const Scalar &c = t.at(j);
      if (!c.is_zero())
        s += mk * c;
    }
    return s;
  });
}

Tensor permute(const Tensor &t, std::span<const std::size_t> perm) {
  if (perm.size() != t.valence())
    throw std::invalid_argument("permutation arity mismatch");
  return Tensor::generate(t.dim(), t.valence(), [&](const Tensor::Index &idx) {
    Tensor::Index src(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      src[a] = idx[perm[a]];
    return t.at(src);
  });
}

Tensor cyclic_sum3(const Tensor &t) {
  if (t.valence() < 3)
    throw std::invalid_argument("cyclic sum needs valence >= 3");
  std::vector<std::size_t> p1(t.valence()), p2(t.valence());
  std::iota(p1.begin(), p1.end(), 0);
  std::iota(p2.begin(), p2.end(), 0);
  // (y, z, x, ...) and (z, x, y, ...)
  p1[0] = 1; p1[1] = 2; p1[2] = 0;
  p2[0] = 2; p2[1] = 0; p2[2] = 1;
  return t + permute(t, p1) + permute(t, p2);
}

Tensor tensor_product(const Tensor &a, const Tensor &b) {
  const std::size_t p = a.valence();
  return Tensor::generate(a.dim(), p + b.valence(), [&](const Tensor::Index &idx) {
    const Scalar &x = a.at(std::span(idx).subspan(0, p));
    if (x.is_zero())
      return Scalar();
    const Scalar &y = b.at(std::span(idx).subspan(p));
    return y.is_zero() ? Scalar() : x * y;
  });
}

namespace {

int permutation_sign(const std::vector<std::size_t> &perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j])
        sign = -sign;
  return sign;
}

} // namespace

Tensor wedge(const Tensor &a, const Tensor &b) {
  const std::size_t p = a.valence(), q = b.valence();
  // Enumerate (p,q)-shuffles as choices of which positions feed `a`.
  std::vector<std::pair<std::vector<std::size_t>, int>> shuffles;
  std::vector<bool> mask(p + q, false);
  std::fill(mask.begin(), mask.begin() + p, true);
  do {
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < p + q; ++i)
      if (mask[i])
        perm.push_back(i);
    for (std::size_t i = 0; i < p + q; ++i)
      if (!mask[i])
        perm.push_back(i);
    shuffles.emplace_back(perm, permutation_sign(perm));
  } while (std::prev_permutation(mask.begin(), mask.end()));

  const Tensor ab = tensor_product(a, b);
  return Tensor::generate(a.dim(), p + q, [&](const Tensor::Index &idx) {
    Scalar s;
    Tensor::Index src(idx.size());
    for (const auto &[perm, sign] : shuffles) {
      for (std::size_t k = 0; k < perm.size(); ++k)
        src[k] = idx[perm[k]];
      const Scalar &c = ab.at(src);
      if (!c.is_zero())
        s += sign > 0 ? c : -c;
    }
    return s;
  });
}

CheckOutcome alternating_check(const Tensor &t) {
  for (std::size_t a = 0; a + 1 < t.valence(); ++a) {
    auto o = slot_symmetry(t, a, a + 1, -1);
    if (!o.ok)
      return o;
  }
  return CheckOutcome::pass();
}

Tensor covector(const Vector &v) {
  Tensor t(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    t(i) = v[i];
  return t;
}

Tensor from_matrix(const Matrix &m, TensorRole role) {
  Tensor t(m.size(), 2);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      t(i, j) = m[i][j];
  return role == TensorRole::generic ? t : t.with_role(role);
}

Scalar square_norm(const Tensor &t, const Matrix &g_inv) {
  Tensor raised = t;
  for (std::size_t slot = 0; slot < t.valence(); ++slot)
    raised = apply_slot(raised, slot, g_inv);
  Scalar s;
  for (std::size_t f = 0; f < t.size(); ++f)
    if (!t.comps()[f].is_zero() && !raised.comps()[f].is_zero())
      s += t.comps()[f] * raised.comps()[f];
  return s;
}

} // namespace acbm
