#include "acbm/check.hpp"

#include <map>

namespace acbm {

CheckOutcome all_of(std::initializer_list<CheckOutcome> outcomes) {
  for (const auto &o : outcomes)
    if (!o.ok)
      return o;
  return CheckOutcome::pass();
}

CheckOutcome expect_equal(const Scalar &lhs, const Scalar &rhs,
                          std::vector<std::size_t> indices) {
  if (lhs == rhs)
    return CheckOutcome::pass();
  return CheckOutcome::fail({std::move(indices), lhs, rhs});
}

std::string to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::hypothesis_not_met:
    return "hypothesis_not_met";
  case Status::not_applicable:
    return "not_applicable";
  }
  return "unknown";
}

CheckResult make_result(std::string name, std::string anchor,
                        const CheckOutcome &outcome, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.note = std::move(note);
  r.status = outcome.ok ? Status::pass : Status::fail;
  if (!outcome.ok) {
    r.witness = outcome.witness ? outcome.witness : Witness{{}, Scalar(), Scalar(1)};
  }
  return r;
}

CheckResult gated_result(std::string name, std::string anchor, Status status,
                         std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.status = status;
  r.note = std::move(note);
  return r;
}

namespace {

std::string join(const std::vector<std::string> &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "; " : "") + v[i];
  return out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error("validation failed: " + join(violations)),
      violations_(std::move(violations)) {}

std::vector<Scalar> vanishing_conditions(const std::vector<Scalar> &values) {
  std::map<std::string, Scalar> seen;
  for (const auto &v : values)
    if (!v.is_zero()) {
      Scalar m = monic(v);
      seen.emplace(m.str(), m);
    }
  std::vector<Scalar> out;
  for (auto &[_, m] : seen)
    out.push_back(m);
  return out;
}

} // namespace acbm
