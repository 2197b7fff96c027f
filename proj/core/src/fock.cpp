#include "hilbfock/fock.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hilbfock/localization.hpp"

namespace hilbfock {

FockClass FockClass::fix(const Partition& lambda) {
    FockClass x;
    x.coords_[lambda] = RatFunc(1);
    return x;
}

RatFunc FockClass::coefficient(const Partition& lambda) const {
    auto it = coords_.find(lambda);
    return it == coords_.end() ? RatFunc() : it->second;
}

void FockClass::add(const Partition& lambda, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coords_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coords_.erase(it);
    }
}

std::set<int> FockClass::support_weights() const {
    std::set<int> out;
    for (const auto& [lambda, c] : coords_) out.insert(lambda.weight());
    return out;
}

FockClass FockClass::graded_component(int n) const {
    FockClass out;
    for (const auto& [lambda, c] : coords_)
        if (lambda.weight() == n) out.coords_.emplace(lambda, c);
    return out;
}

bool FockClass::homogeneous() const {
    return support_weights().size() == 1;
}

FockClass FockClass::operator-() const {
    FockClass out;
    for (const auto& [lambda, c] : coords_) out.coords_.emplace(lambda, -c);
    return out;
}

FockClass& FockClass::operator+=(const FockClass& o) {
    for (const auto& [lambda, c] : o.coords_) add(lambda, c);
    return *this;
}

FockClass& FockClass::operator-=(const FockClass& o) {
    for (const auto& [lambda, c] : o.coords_) add(lambda, -c);
    return *this;
}

FockClass FockClass::scaled(const RatFunc& c) const {
    FockClass out;
    if (c.is_zero()) return out;
    for (const auto& [lambda, coef] : coords_) out.coords_.emplace(lambda, coef * c);
    return out;
}

std::string FockClass::to_string() const {
    if (coords_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // weight-graded listing, canonical partition order inside each weight
    for (int n : support_weights()) {
        for (const Partition& lambda : partitions_of(n)) {
            auto it = coords_.find(lambda);
            if (it == coords_.end()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second.to_string() << ")*fix" << lambda.to_string();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FockClass& x) {
    return os << x.to_string();
}

FockClass cup(const FockClass& x, const FockClass& y) {
    FockClass out;
    for (const auto& [lambda, c] : x.coords()) {
        RatFunc d = y.coefficient(lambda);
        if (!d.is_zero()) out.add(lambda, c * d);
    }
    return out;
}

RatFunc inner(const FockClass& x, const FockClass& y) {
    if (x.is_zero() || y.is_zero()) return RatFunc();
    if (!x.homogeneous() || !y.homogeneous() ||
        *x.support_weights().begin() != *y.support_weights().begin())
        throw std::invalid_argument(
            "inner: arguments must be supported in a single common degree");
    RatFunc acc;
    for (const auto& [lambda, c] : x.coords()) {
        RatFunc d = y.coefficient(lambda);
        if (d.is_zero()) continue;
        acc += c * d * fix_pairing(lambda);
    }
    return acc;
}

CupAndInner cup_and_inner(const FockClass& x, const FockClass& y) {
    return {cup(x, y), inner(x, y)};
}

} // namespace hilbfock
