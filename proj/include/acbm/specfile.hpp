#pragma once

#include "acbm/fixtures.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace acbm {

/// Parses a linear combination of e1..e<dim> with coefficients in the
/// expression grammar, e.g. "-l1*e1 + 2*m1*e5". Positions in errors are
/// shifted by `line` and `column_offset`.
Vector parse_linear_combination(std::string_view text,
                                const ParamSpacePtr &params, std::size_t dim,
                                int line = 1, int column_offset = 0);

/// Canonical text of a linear combination ("0" when v is zero).
std::string format_linear_combination(const Vector &v);

/// Loads the line-oriented spec format. Throws ParseError with a source
/// position for malformed or conflicting lines, and ValidationError for a
/// missing directive or a degenerate metric.
fixtures::Fixture parse_spec(std::string_view text);
fixtures::Fixture load_spec_file(const std::string &path);

/// Writes alg and s in the spec format; parse_spec inverts it.
std::string export_spec(const LieAlgebra &alg, const StructurePack &s);

} // namespace acbm
