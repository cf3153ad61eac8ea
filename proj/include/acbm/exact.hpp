#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acbm {

using Rational = mpq_class;

/// Raised when two Scalars built over different parameter spaces meet.
class ParamSpaceMismatch : public std::runtime_error {
public:
  ParamSpaceMismatch() : std::runtime_error("parameter space mismatch") {}
};

/// Syntax or semantic error in an expression or spec file, with a 1-based
/// source position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string &message() const { return message_; }

private:
  std::string message_;
  int line_;
  int column_;
};

/// Ordered list of parameter names. Scalars index their exponent vectors by
/// position in this list.
class ParamSpace {
public:
  ParamSpace() = default;
  explicit ParamSpace(std::vector<std::string> names);

  const std::vector<std::string> &names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  static bool is_identifier(std::string_view s);

  friend bool operator==(const ParamSpace &a, const ParamSpace &b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
};

using ParamSpacePtr = std::shared_ptr<const ParamSpace>;

ParamSpacePtr make_param_space(std::vector<std::string> names);

/// Exponent vector, one entry per parameter.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Map from parameter name to a rational value.
using Assignment = std::map<std::string, Rational>;

/// Element of Q[params]. Canonical: no zero coefficients, so equality is
/// structural. A Scalar without a parameter space is a pure rational and
/// combines with Scalars over any space.
class Scalar {
public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Scalar() = default;
  Scalar(long value); // NOLINT(google-explicit-constructor)
  Scalar(const Rational &value); // NOLINT(google-explicit-constructor)
  Scalar(ParamSpacePtr space, const Rational &value);

  static Scalar variable(ParamSpacePtr space, std::size_t index);
  static Scalar variable(ParamSpacePtr space, std::string_view name);
  static Scalar from_terms(ParamSpacePtr space, TermMap terms);

  const ParamSpacePtr &space() const { return space_; }
  const TermMap &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant value; throws if the Scalar depends on a parameter.
  Rational constant_value() const;
  /// Total degree; -1 for the zero Scalar.
  int degree() const;

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &other);
  Scalar &operator-=(const Scalar &other);
  Scalar &operator*=(const Scalar &other);
  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(const Scalar &a, const Scalar &b);

  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  /// Full evaluation. Every parameter that occurs must be assigned.
  Scalar eval(const Assignment &assignment) const;
  /// Partial substitution; unassigned parameters stay symbolic and the
  /// result keeps this Scalar's parameter space.
  Scalar substitute(const Assignment &assignment) const;

  /// Exact quotient a / b if b divides a in Q[params].
  static std::optional<Scalar> divide_exact(const Scalar &a, const Scalar &b);

  /// Names of parameters that actually occur.
  std::vector<std::string> occurring_params() const;

  /// Canonical text in the expression grammar, graded lex order.
  std::string str() const;

private:
  void lift_to(const ParamSpacePtr &space);
  static ParamSpacePtr common_space(const Scalar &a, const Scalar &b);

  ParamSpacePtr space_;
  TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

/// s divided by its leading coefficient; zero stays zero.
Scalar monic(const Scalar &s);

/// Expression text without spaces (still valid in the expression grammar).
std::string compact(const Scalar &s);

/// Parses `text` in the expression grammar. `line` and `column_offset`
/// shift reported positions when the text is embedded in a larger file.
Scalar parse_expr(std::string_view text, const ParamSpacePtr &params,
                  int line = 1, int column_offset = 0);

/// Parses a rational literal such as "3", "-1/2".
Rational parse_rational(std::string_view text);

} // namespace acbm
