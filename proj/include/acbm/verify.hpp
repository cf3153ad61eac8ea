#pragma once

#include "acbm/curvature.hpp"

#include <iosfwd>
#include <optional>

namespace acbm {

/// Everything computed once per input.
struct Analysis {
  Connection nabla;
  Tensor F;
  Tensor N;
  ClassMembership classes;
  bool killing = false;
  bool non_abelian = false;
  Scalar norm_nabla_phi;
  Tensor R;
  Tensor rho;
  Scalar tau;

  /// Present only when the φKT-connection exists.
  std::optional<Tensor> T;
  std::optional<Connection> D;
  std::optional<Tensor> DT;
  std::optional<Tensor> K;
  std::optional<Tensor> rhoD;
  std::optional<Scalar> tauD;
  std::optional<Scalar> normT;
  /// Reason the φKT-connection is absent.
  std::string phikt_error;
};

/// Validates (structure relations and Jacobi) and computes the analysis.
/// Throws ValidationError on invalid input.
Analysis analyze(const LieAlgebra &alg, const StructurePack &s);

/// True when alg and s coincide with the symbolic five-dimensional family.
bool is_paper_family(const LieAlgebra &alg, const StructurePack &s);

struct SuiteOptions {
  /// Run the family-specific table checks when the input is the family.
  bool family_checks = true;
};

/// Runs every registered check in a fixed order. Throws ValidationError
/// before any check runs when the input is invalid.
std::vector<CheckResult> run_suite(const LieAlgebra &alg,
                                   const StructurePack &s,
                                   const SuiteOptions &options = {});

enum class ReportFormat { text, machine };

/// One line per result (plus witness details in text mode).
void print_report(std::ostream &os, const std::vector<CheckResult> &results,
                  ReportFormat format);

/// `CHECK <name> <status> [witness=... lhs=... rhs=...] anchor="..."`
std::string machine_line(const CheckResult &r);

bool any_failed(const std::vector<CheckResult> &results);

} // namespace acbm
