#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acbm/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace acbm;

namespace {

Matrix from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m;
  for (auto r : rows) {
    Vector v;
    for (int x : r)
      v.emplace_back(Scalar(x));
    m.push_back(v);
  }
  return m;
}

Tensor random_tensor(std::mt19937 &rng, std::size_t dim, std::size_t valence) {
  std::uniform_int_distribution<int> d(-3, 3);
  return Tensor::generate(dim, valence,
                          [&](const Tensor::Index &) { return Scalar(d(rng)); });
}

int permutation_sign(std::vector<std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        sign = -sign;
  return sign;
}

// Full antisymmetrization divided by nothing: Σ sgn(σ) t(x_σ).
Tensor alternation(const Tensor &t) {
  std::vector<std::size_t> p(t.valence());
  std::iota(p.begin(), p.end(), 0);
  Tensor out(t.dim(), t.valence());
  do {
    out += Scalar(permutation_sign(p)) * permute(t, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

TEST_CASE("determinant, inverse and inertia") {
  const Matrix m = from_ints({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m) == Scalar(18));
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(multiply(m, *inv) == identity_matrix(3));
  CHECK_FALSE(inverse(from_ints({{1, 2}, {2, 4}})));

  const Inertia in = inertia(from_ints({{1, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0},
                                        {0, 0, -1, 0, 0},
                                        {0, 0, 0, -1, 0},
                                        {0, 0, 0, 0, 1}}));
  CHECK(in.positive == 3);
  CHECK(in.negative == 2);
  // Zero diagonal still has a definite signature.
  const Inertia hyp = inertia(from_ints({{0, 1}, {1, 0}}));
  CHECK(hyp.positive == 1);
  CHECK(hyp.negative == 1);
  CHECK(hyp.zero == 0);
}

TEST_CASE("multilinear evaluation matches contraction by hand") {
  std::mt19937 rng(3);
  const Tensor t = random_tensor(rng, 3, 2);
  const Vector x = {Scalar(1), Scalar(2), Scalar(-1)};
  const Vector y = {Scalar(0), Scalar(1), Scalar(3)};
  Scalar expected;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      expected += x[i] * y[j] * t(i, j);
  const std::array<Vector, 2> args{x, y};
  CHECK(t.eval(args) == expected);
}

TEST_CASE("wedge of covectors and alternation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor a = random_tensor(rng, 4, 1), b = random_tensor(rng, 4, 1),
                 c = random_tensor(rng, 4, 1);
    CHECK(wedge(a, b) == tensor_product(a, b) - tensor_product(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(wedge(a, b), c) ==
          alternation(tensor_product(tensor_product(a, b), c)));
    CHECK(alternating_check(wedge(wedge(a, b), c)));
  }
}

TEST_CASE("wedge of alternating forms is graded commutative") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor a = random_tensor(rng, 4, 1), b = random_tensor(rng, 4, 1),
                 c = random_tensor(rng, 4, 1);
    const Tensor two = wedge(a, b);
    CHECK(wedge(two, c) == wedge(c, two));
    CHECK(wedge(a, c) == -wedge(c, a));
  }
}

TEST_CASE("permute and cyclic sum") {
  std::mt19937 rng(13);
  const Tensor t = random_tensor(rng, 3, 4);
  const std::vector<std::size_t> swap01 = {1, 0, 2, 3};
  CHECK(permute(permute(t, swap01), swap01) == t);
  const Tensor s = cyclic_sum3(t);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t z = 0; z < 3; ++z)
        for (std::size_t w = 0; w < 3; ++w)
          CHECK(s(x, y, z, w) == t(x, y, z, w) + t(y, z, x, w) + t(z, x, y, w));
}

TEST_CASE("apply_slot substitutes a linear map in one argument") {
  std::mt19937 rng(17);
  const Tensor t = random_tensor(rng, 3, 3);
  const Matrix m = from_ints({{0, 1, 0}, {-1, 0, 2}, {0, 0, 1}});
  const Tensor u = apply_slot(t, 1, m);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Vector col(3);
        for (std::size_t r = 0; r < 3; ++r)
          col[r] = m[r][j];
        const std::array<Vector, 3> args{basis_vector(3, i), col,
                                         basis_vector(3, k)};
        CHECK(u(i, j, k) == t.eval(args));
      }
}

TEST_CASE("square norm is the full contraction") {
  std::mt19937 rng(19);
  const Tensor t = random_tensor(rng, 3, 2);
  const Matrix g_inv = from_ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  Scalar expected;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          expected += g_inv[i][k] * g_inv[j][l] * t(i, j) * t(k, l);
  CHECK(square_norm(t, g_inv) == expected);
}

TEST_CASE("compare reports the first differing index") {
  Tensor a(3, 2), b(3, 2);
  b(1, 2) = Scalar(5);
  b(2, 0) = Scalar(1);
  const CheckOutcome r = compare(a, b);
  REQUIRE_FALSE(r);
  CHECK(r.witness->indices == std::vector<std::size_t>{1, 2});
  CHECK(r.witness->rhs == Scalar(5));
}

TEST_CASE("roles validate their symmetries") {
  Tensor t(3, 3);
  t(0, 1, 2) = Scalar(1);
  CHECK_THROWS_AS(t.with_role(TensorRole::T), ValidationError);
  std::mt19937 rng(23);
  const Tensor a = random_tensor(rng, 3, 1), b = random_tensor(rng, 3, 1),
               c = random_tensor(rng, 3, 1);
  CHECK_NOTHROW(wedge(wedge(a, b), c).with_role(TensorRole::T));
}
