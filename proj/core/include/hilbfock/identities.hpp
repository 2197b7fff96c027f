#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbfock/operators.hpp"

namespace hilbfock {

/// First failing entry of an identity check: source partition, target
/// partition, and the canonical text of both sides.
struct Counterexample {
    Partition lambda;
    Partition mu;
    std::string expected;
    std::string got;
};

/// Machine-readable result of one identity check. Reports are pure data:
/// the same truncation always yields the same report.
struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> window;
    bool pass = false;
    long comparisons = 0;
    std::optional<Counterexample> counterexample;
    std::string note; // extra findings, e.g. the realized commutator sign
};

/// Ids of all registered identities in registry (stable) order,
/// diagnostics included.
std::vector<std::string> identity_ids();

/// True for identities that are informational diagnostics rather than
/// part of the verification battery (excluded from run_all).
bool identity_is_diagnostic(const std::string& id);

std::string identity_description(const std::string& id);

/// Run one identity at the given truncation. Unknown ids throw
/// UnknownIdentityError.
IdentityReport check_identity(const std::string& id, Truncation t);

/// Run every registered non-diagnostic identity, reports ordered by id.
std::vector<IdentityReport> run_all(Truncation t);

/// Exhaustive block comparison of two operators over the given source
/// degrees; the building block of most checks, exposed for tests that
/// compare deliberately mutated operators.
IdentityReport compare_operators_report(const std::string& id, const Operator& got,
                                        const Operator& expected,
                                        const std::vector<int>& degrees);

} // namespace hilbfock
