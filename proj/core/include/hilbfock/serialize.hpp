#pragma once

#include <string>
#include <vector>

#include "hilbfock/classes.hpp"
#include "hilbfock/identities.hpp"

namespace hilbfock {

enum class OutputFormat { json, csv, latex };

OutputFormat parse_format(const std::string& name);

/// Base-change matrix in the declared schema:
/// { "n", "from", "to", "order": [partition...], "entries": [[ratfunc...]] }.
/// Rows are target partitions, columns source partitions, canonical order.
std::string emit_matrix(int n, Basis from, Basis to, const Mat& m, OutputFormat fmt);

/// Classical (U=V=0) matrix, same layout with rational entries.
std::string emit_classical_matrix(int n, Basis from, Basis to,
                                  const std::vector<std::vector<Rational>>& m,
                                  OutputFormat fmt);

/// Per-degree operator coefficient blocks for an operator of the given
/// conformal degree. Rows are target partitions, columns source
/// partitions (the transpose of the internal block layout, matching the
/// matrix orientation above).
std::string emit_operator_blocks(const std::string& name, int conformal_degree,
                                 const std::vector<int>& degrees,
                                 const std::vector<Mat>& blocks, OutputFormat fmt);

/// Fix coordinates of a class, weight-graded canonical order.
std::string emit_class(const FockClass& x, OutputFormat fmt);

/// Identity reports:
/// { "id", "status", "window", "counterexample", "comparisons"[, "note"] }.
std::string emit_reports(const std::vector<IdentityReport>& reports, OutputFormat fmt);

} // namespace hilbfock
