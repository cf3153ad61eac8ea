#pragma once

#include "acbm/exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acbm {

/// First failing index tuple (0-based) with both sides of the identity.
struct Witness {
  std::vector<std::size_t> indices;
  Scalar lhs;
  Scalar rhs;
};

/// Outcome of a componentwise identity check.
struct CheckOutcome {
  bool ok = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return ok; }

  static CheckOutcome pass() { return {}; }
  static CheckOutcome fail(Witness w) { return {false, std::move(w)}; }
};

/// Combines outcomes; the first failure wins.
CheckOutcome all_of(std::initializer_list<CheckOutcome> outcomes);

/// Compares two Scalars and reports a witness at `indices` when they differ.
CheckOutcome expect_equal(const Scalar &lhs, const Scalar &rhs,
                          std::vector<std::size_t> indices = {});

enum class Status { pass, fail, hypothesis_not_met, not_applicable };

std::string to_string(Status s);

/// One entry in a verification report.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string anchor;
  std::string note;
};

/// Builds a CheckResult from an outcome.
CheckResult make_result(std::string name, std::string anchor,
                        const CheckOutcome &outcome, std::string note = {});

CheckResult gated_result(std::string name, std::string anchor, Status status,
                         std::string note);

/// Distinct nonzero polynomials among `values`, made monic and sorted by
/// canonical text. Their common zero set is where all values vanish.
std::vector<Scalar> vanishing_conditions(const std::vector<Scalar> &values);

/// Structure or spec data that violates the defining relations.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string> &violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

/// An operation was called on an input outside the class it requires.
class ClassGateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace acbm
