#include "acbm/structure.hpp"

#include <sstream>

namespace acbm {

namespace {

std::string pos(std::size_t i) { return std::to_string(i + 1); }

Matrix substitute(const Matrix &m, const Assignment &a) {
  Matrix r = m;
  for (auto &row : r)
    for (auto &x : row)
      x = x.substitute(a);
  return r;
}

Vector substitute(const Vector &v, const Assignment &a) {
  Vector r = v;
  for (auto &x : r)
    x = x.substitute(a);
  return r;
}

bool all_constant(const Matrix &m) {
  for (const auto &row : m)
    for (const auto &x : row)
      if (!x.is_constant())
        return false;
  return true;
}

} // namespace

StructurePack StructurePack::substitute(const Assignment &assignment) const {
  StructurePack r;
  r.phi = acbm::substitute(phi, assignment);
  r.xi = acbm::substitute(xi, assignment);
  r.eta = acbm::substitute(eta, assignment);
  r.g = acbm::substitute(g, assignment);
  r.g_inv = acbm::substitute(g_inv, assignment);
  return r;
}

StructurePack make_structure(Matrix phi, Vector xi, Vector eta, Matrix g) {
  const std::size_t n = xi.size();
  if (phi.size() != n || eta.size() != n || g.size() != n)
    throw std::invalid_argument("structure shapes do not match");
  std::optional<Matrix> inv;
  try {
    inv = inverse(g);
  } catch (const std::domain_error &e) {
    throw ValidationError({std::string("metric inverse: ") + e.what()});
  }
  if (!inv)
    throw ValidationError({"degenerate metric"});
  return StructurePack{std::move(phi), std::move(xi), std::move(eta),
                       std::move(g), std::move(*inv)};
}

ValidationReport validate_structure(const LieAlgebra &alg,
                                    const StructurePack &s) {
  ValidationReport rep;
  const std::size_t n = s.dim();
  auto violate = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  if (alg.dim() != n || s.phi.size() != n || s.eta.size() != n ||
      s.g.size() != n || s.g_inv.size() != n) {
    violate("shape mismatch between algebra and structure");
    return rep;
  }
  if (n % 2 == 0)
    violate("dimension " + std::to_string(n) + " is not odd");

  const Vector phi_xi = s.phi_of(s.xi);
  for (std::size_t i = 0; i < n && rep.violations.size() < 64; ++i)
    if (!phi_xi[i].is_zero()) {
      violate("phi xi != 0 (component " + pos(i) + ")");
      break;
    }

  const Matrix phi2 = multiply(s.phi, s.phi);
  [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar rhs = s.xi[i] * s.eta[j];
        if (i == j)
          rhs -= Scalar(1);
        if (phi2[i][j] != rhs) {
          violate("phi^2 != -Id + eta (x) xi at (" + pos(i) + "," + pos(j) + ")");
          return;
        }
      }
  }();

  for (std::size_t j = 0; j < n; ++j) {
    Scalar v;
    for (std::size_t i = 0; i < n; ++i)
      v += s.eta[i] * s.phi[i][j];
    if (!v.is_zero()) {
      violate("eta o phi != 0 at E_" + pos(j));
      break;
    }
  }

  if (s.eta_of(s.xi) != Scalar(1))
    violate("eta(xi) = " + s.eta_of(s.xi).str() + " != 1");

  [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (s.g[i][j] != s.g[j][i]) {
          violate("g not symmetric at (" + pos(i) + "," + pos(j) + ")");
          return;
        }
  }();

  [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector ei = basis_vector(n, i), ej = basis_vector(n, j);
        const Scalar lhs = s.metric(s.phi_of(ei), s.phi_of(ej));
        const Scalar rhs = -s.g[i][j] + s.eta[i] * s.eta[j];
        if (lhs != rhs) {
          violate("g(phi x, phi y) != -g(x,y) + eta(x)eta(y) at (" + pos(i) +
                  "," + pos(j) + ")");
          return;
        }
      }
  }();

  const Matrix id = multiply(s.g, s.g_inv);
  if (id != identity_matrix(n))
    violate("g * g_inv != Id");

  const Vector g_xi = acbm::apply(s.g, s.xi);
  for (std::size_t i = 0; i < n; ++i)
    if (g_xi[i] != s.eta[i]) {
      violate("eta != g(., xi) at E_" + pos(i));
      break;
    }

  if (all_constant(s.g)) {
    bool symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        symmetric = symmetric && s.g[i][j] == s.g[j][i];
    if (symmetric && n % 2 == 1) {
      const auto in = inertia(s.g);
      const std::size_t half = n / 2;
      if (in.negative != half || in.positive != half + 1) {
        std::ostringstream os;
        os << "metric signature (" << in.negative << " negative, "
           << in.positive << " positive) is not (" << half << ", "
           << half + 1 << ")";
        violate(os.str());
      }
    }
  } else {
    rep.notes.push_back("signature not checked: metric has symbolic entries");
  }
  return rep;
}

void require_valid(const LieAlgebra &alg, const StructurePack &s) {
  auto rep = validate_structure(alg, s);
  if (!rep.ok)
    throw ValidationError(rep.violations);
}

Matrix associated_metric(const StructurePack &s) {
  const std::size_t n = s.dim();
  Matrix gt = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = basis_vector(n, i), ej = basis_vector(n, j);
      gt[i][j] = s.metric(ei, s.phi_of(ej)) + s.eta[i] * s.eta[j];
    }
  return gt;
}

Vector project_h(const StructurePack &s, const Vector &x) {
  Vector v = s.phi_of(s.phi_of(x));
  for (auto &c : v)
    c = -c;
  return v;
}

Vector project_v(const StructurePack &s, const Vector &x) {
  return scale(s.eta_of(x), s.xi);
}

Tensor eta_tensor(const StructurePack &s) { return covector(s.eta); }

Tensor metric_tensor(const StructurePack &s) { return from_matrix(s.g); }

bool is_rational(const LieAlgebra &alg, const StructurePack &s) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!alg.c(i, j, k).is_constant())
          return false;
  for (const auto *m : {&s.phi, &s.g})
    if (!all_constant(*m))
      return false;
  for (const auto *v : {&s.xi, &s.eta})
    for (const auto &x : *v)
      if (!x.is_constant())
        return false;
  return true;
}

} // namespace acbm
