#pragma once

#include <stdexcept>
#include <string>

namespace hilbfock {

/// Thrown when a computation would need a graded component above the
/// active truncation window. Components above the window are undefined,
/// not zero, so touching them is an error rather than a silent drop.
class TruncationError : public std::runtime_error {
public:
    TruncationError(int degree, int max_weight)
        : std::runtime_error("truncation overflow: degree " + std::to_string(degree) +
                             " exceeds max weight " + std::to_string(max_weight)),
          degree_(degree), max_weight_(max_weight) {}

    int degree() const { return degree_; }
    int max_weight() const { return max_weight_; }

private:
    int degree_;
    int max_weight_;
};

/// Singular linear system; carries the rank found before elimination stalled.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(int rank, int size)
        : std::runtime_error("singular matrix: rank " + std::to_string(rank) +
                             " < " + std::to_string(size)),
          rank_(rank) {}

    int rank() const { return rank_; }

private:
    int rank_;
};

/// Text input that does not match the canonical grammar.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A class expected to live in the non-localized ring has a genuine
/// denominator, so the classical (U=V=0) projection is undefined.
class IntegralityError : public std::runtime_error {
public:
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownIdentityError : public std::runtime_error {
public:
    explicit UnknownIdentityError(const std::string& id)
        : std::runtime_error("unknown identity id: " + id) {}
};

} // namespace hilbfock
