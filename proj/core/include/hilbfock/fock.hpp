#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "hilbfock/partition.hpp"
#include "hilbfock/ratfunc.hpp"

namespace hilbfock {

/// Truncation window for the infinite direct sum: graded components of
/// weight <= max_weight are exact, components above are undefined (not
/// zero) and touching them raises TruncationError.
struct Truncation {
    int max_weight = 6;
};

/// Finitely supported element of the direct sum in fix coordinates:
/// an association partition -> coefficient with no stored zeros.
class FockClass {
public:
    FockClass() = default;

    static FockClass vacuum() { return fix(Partition{}); }
    static FockClass fix(const Partition& lambda);

    const std::map<Partition, RatFunc>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    RatFunc coefficient(const Partition& lambda) const;
    void add(const Partition& lambda, const RatFunc& c);

    /// Weights carrying a nonzero component.
    std::set<int> support_weights() const;
    /// Restriction to |lambda| = n.
    FockClass graded_component(int n) const;
    /// True when supported in a single weight (the zero class is not).
    bool homogeneous() const;

    FockClass operator-() const;
    FockClass& operator+=(const FockClass& o);
    FockClass& operator-=(const FockClass& o);
    friend FockClass operator+(FockClass a, const FockClass& b) { return a += b; }
    friend FockClass operator-(FockClass a, const FockClass& b) { return a -= b; }
    FockClass scaled(const RatFunc& c) const;

    friend bool operator==(const FockClass& a, const FockClass& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const FockClass& a, const FockClass& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<Partition, RatFunc> coords_;
};

std::ostream& operator<<(std::ostream& os, const FockClass& x);

/// Pointwise (cup) product of fix coordinates.
FockClass cup(const FockClass& x, const FockClass& y);

/// <x, y> = sum over lambda of x_lambda y_lambda / Tan(lambda). Both
/// arguments must be supported in one common weight.
RatFunc inner(const FockClass& x, const FockClass& y);

struct CupAndInner {
    FockClass cup;
    RatFunc inner;
};

CupAndInner cup_and_inner(const FockClass& x, const FockClass& y);

} // namespace hilbfock
