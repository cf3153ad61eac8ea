#include "acbm/exact.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace acbm {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      message_(std::move(message)), line_(line), column_(column) {}

bool ParamSpace::is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

ParamSpace::ParamSpace(std::vector<std::string> names)
    : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto &n : names_) {
    if (!is_identifier(n))
      throw std::invalid_argument("invalid parameter name '" + n + "'");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate parameter name '" + n + "'");
  }
}

std::optional<std::size_t> ParamSpace::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ParamSpacePtr make_param_space(std::vector<std::string> names) {
  return std::make_shared<const ParamSpace>(std::move(names));
}

bool GrlexGreater::operator()(const Monomial &a, const Monomial &b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db)
    return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Scalar::Scalar(long value) : Scalar(Rational(value)) {}

Scalar::Scalar(const Rational &value) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_.emplace(Monomial{}, std::move(v));
  }
}

Scalar::Scalar(ParamSpacePtr space, const Rational &value)
    : space_(std::move(space)) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_.emplace(Monomial(space_ ? space_->size() : 0, 0), std::move(v));
  }
}

Scalar Scalar::variable(ParamSpacePtr space, std::size_t index) {
  if (!space || index >= space->size())
    throw std::out_of_range("parameter index out of range");
  Scalar s;
  Monomial m(space->size(), 0);
  m[index] = 1;
  s.space_ = std::move(space);
  s.terms_.emplace(std::move(m), Rational(1));
  return s;
}

Scalar Scalar::variable(ParamSpacePtr space, std::string_view name) {
  auto idx = space ? space->index_of(name) : std::nullopt;
  if (!idx)
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  return variable(std::move(space), *idx);
}

Scalar Scalar::from_terms(ParamSpacePtr space, TermMap terms) {
  Scalar s;
  s.space_ = std::move(space);
  const std::size_t n = s.space_ ? s.space_->size() : 0;
  for (auto &[m, c] : terms) {
    if (m.size() != n)
      throw std::invalid_argument("exponent vector length mismatch");
    if (c != 0) {
      Rational v = c;
      v.canonicalize();
      s.terms_.emplace(m, std::move(v));
    }
  }
  return s;
}

bool Scalar::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() > 1)
    return false;
  const auto &m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

Rational Scalar::constant_value() const {
  if (!is_constant())
    throw std::logic_error("Scalar '" + str() + "' is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Scalar::degree() const {
  if (terms_.empty())
    return -1;
  const auto &m = terms_.begin()->first; // grlex: first term has max degree
  return static_cast<int>(std::accumulate(m.begin(), m.end(), std::uint64_t{0}));
}

ParamSpacePtr Scalar::common_space(const Scalar &a, const Scalar &b) {
  if (!a.space_)
    return b.space_;
  if (!b.space_ || a.space_ == b.space_)
    return a.space_;
  if (!(*a.space_ == *b.space_))
    throw ParamSpaceMismatch();
  return a.space_;
}

void Scalar::lift_to(const ParamSpacePtr &space) {
  if (space_ || !space)
    return;
  space_ = space;
  if (!terms_.empty()) {
    Rational c = terms_.begin()->second;
    terms_.clear();
    terms_.emplace(Monomial(space->size(), 0), c);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

Scalar &Scalar::operator+=(const Scalar &other) {
  auto space = common_space(*this, other);
  lift_to(space);
  Scalar rhs = other;
  rhs.lift_to(space);
  for (const auto &[m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &other) { return *this += -other; }

Scalar operator*(const Scalar &a, const Scalar &b) {
  auto space = Scalar::common_space(a, b);
  Scalar r;
  r.space_ = space;
  if (a.is_zero() || b.is_zero())
    return r;
  Scalar lhs = a, rhs = b;
  lhs.lift_to(space);
  rhs.lift_to(space);
  Monomial m;
  for (const auto &[ma, ca] : lhs.terms_) {
    for (const auto &[mb, cb] : rhs.terms_) {
      m = ma;
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] += mb[i];
      auto [it, inserted] = r.terms_.emplace(m, ca * cb);
      if (!inserted)
        it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto &kv) { return kv.second == 0; });
  return r;
}

Scalar &Scalar::operator*=(const Scalar &other) { return *this = *this * other; }

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.is_zero() || b.is_zero())
    return a.is_zero() && b.is_zero();
  if (a.space_ && b.space_ && a.space_ != b.space_ && !(*a.space_ == *b.space_))
    throw ParamSpaceMismatch();
  if (a.is_constant() && b.is_constant())
    return a.constant_value() == b.constant_value();
  return a.terms_ == b.terms_;
}

namespace {

Rational power(const Rational &base, std::uint32_t exp) {
  Rational r = 1;
  for (std::uint32_t i = 0; i < exp; ++i)
    r *= base;
  return r;
}

} // namespace

Scalar Scalar::substitute(const Assignment &assignment) const {
  if (!space_)
    return *this;
  const std::size_t n = space_->size();
  std::vector<std::optional<Rational>> values(n);
  for (const auto &[name, value] : assignment) {
    if (auto idx = space_->index_of(name))
      values[*idx] = value;
  }
  Scalar r;
  r.space_ = space_;
  for (const auto &[m, c] : terms_) {
    Monomial rest = m;
    Rational coef = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] && m[i] > 0) {
        coef *= power(*values[i], m[i]);
        rest[i] = 0;
      }
    }
    if (coef == 0)
      continue;
    auto [it, inserted] = r.terms_.emplace(std::move(rest), coef);
    if (!inserted)
      it->second += coef;
  }
  std::erase_if(r.terms_, [](const auto &kv) { return kv.second == 0; });
  return r;
}

Scalar Scalar::eval(const Assignment &assignment) const {
  for (const auto &name : occurring_params()) {
    if (!assignment.count(name))
      throw std::invalid_argument("missing parameter '" + name +
                                  "' in assignment");
  }
  return Scalar(substitute(assignment).constant_value());
}

std::optional<Scalar> Scalar::divide_exact(const Scalar &a, const Scalar &b) {
  if (b.is_zero())
    return std::nullopt;
  auto space = common_space(a, b);
  Scalar rem = a, div = b;
  rem.lift_to(space);
  div.lift_to(space);
  Scalar quot(space, 0);
  const auto &[lm_b, lc_b] = *div.terms_.begin();
  while (!rem.is_zero()) {
    const auto &[lm_r, lc_r] = *rem.terms_.begin();
    Monomial q(lm_r.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (lm_r[i] < lm_b[i])
        return std::nullopt;
      q[i] = lm_r[i] - lm_b[i];
    }
    Scalar::TermMap t;
    t.emplace(std::move(q), lc_r / lc_b);
    Scalar qt = Scalar::from_terms(space, std::move(t));
    quot += qt;
    rem -= qt * div;
  }
  return quot;
}

std::vector<std::string> Scalar::occurring_params() const {
  std::vector<std::string> out;
  if (!space_)
    return out;
  for (std::size_t i = 0; i < space_->size(); ++i) {
    for (const auto &[m, c] : terms_) {
      if (m[i] > 0) {
        out.push_back(space_->names()[i]);
        break;
      }
    }
  }
  return out;
}

std::string Scalar::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      std::string f = space_->names()[i];
      if (m[i] > 1)
        f += "^" + std::to_string(m[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty() || mag != 1)
      factors.insert(factors.begin(), mag.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i)
      os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) {
  return os << s.str();
}

Scalar monic(const Scalar &s) {
  if (s.is_zero())
    return s;
  const Rational lc = s.terms().begin()->second;
  return Scalar(Rational(1) / lc) * s;
}

std::string compact(const Scalar &s) {
  std::string out;
  for (char c : s.str())
    if (c != ' ')
      out += c;
  return out;
}

} // namespace acbm
