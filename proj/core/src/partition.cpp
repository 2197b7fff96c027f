#include "hilbfock/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hilbfock/errors.hpp"

namespace hilbfock {

std::string Cell::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition: parts are 1-indexed");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> dual(parts_[0], 0);
    for (int j = 0; j < parts_[0]; ++j)
        dual[j] = static_cast<int>(std::count_if(
            parts_.begin(), parts_.end(), [j](int p) { return p >= j + 1; }));
    return Partition(dual);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int a = 0; a < length(); ++a)
        for (int b = 0; b < parts_[a]; ++b) out.push_back({a, b});
    return out;
}

bool Partition::contains_cell(const Cell& c) const {
    return c.a >= 0 && c.b >= 0 && c.a < length() && c.b < parts_[c.a];
}

bool Partition::contained_in(const Partition& mu) const {
    for (int i = 1; i <= length(); ++i)
        if (part(i) > mu.part(i)) return false;
    return true;
}

std::vector<Cell> Partition::addable_cells() const {
    std::vector<Cell> out;
    for (int a = 0; a <= length(); ++a) {
        int row = (a < length()) ? parts_[a] : 0;
        int above = (a == 0) ? -1 : parts_[a - 1];
        if (a == 0 || row < above) out.push_back({a, row});
    }
    return out;
}

std::vector<Cell> Partition::removable_cells() const {
    std::vector<Cell> out;
    for (int a = 0; a < length(); ++a) {
        int below = (a + 1 < length()) ? parts_[a + 1] : 0;
        if (parts_[a] > below) out.push_back({a, parts_[a] - 1});
    }
    return out;
}

Partition Partition::with_cell(const Cell& c) const {
    auto add = addable_cells();
    if (std::find(add.begin(), add.end(), c) == add.end())
        throw std::invalid_argument("Partition: cell " + c.to_string() +
                                    " is not addable to " + to_string());
    std::vector<int> p = parts_;
    if (c.a == length())
        p.push_back(1);
    else
        p[c.a] += 1;
    return Partition(p);
}

Partition Partition::without_cell(const Cell& c) const {
    auto rem = removable_cells();
    if (std::find(rem.begin(), rem.end(), c) == rem.end())
        throw std::invalid_argument("Partition: cell " + c.to_string() +
                                    " is not removable from " + to_string());
    std::vector<int> p = parts_;
    p[c.a] -= 1;
    if (p[c.a] == 0) p.pop_back();
    return Partition(p);
}

bool operator<(const Partition& x, const Partition& y) {
    size_t n = std::max(x.parts_.size(), y.parts_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < x.parts_.size() ? x.parts_[i] : 0;
        int b = i < y.parts_.size() ? y.parts_[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos || text[b] != '[' || text[e] != ']')
        throw ParseError("Partition: expected '[p1,p2,...]', got '" + text + "'");
    std::string inner = text.substr(b + 1, e - b - 1);
    std::vector<int> parts;
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("Partition: bad part '" + tok + "' in '" + text + "'");
        }
    }
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("Partition: ") + ex.what());
    }
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& acc,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        generate(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

std::mutex partitions_mutex;
std::map<int, std::vector<Partition>> partitions_memo;

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::lock_guard<std::mutex> lock(partitions_mutex);
    auto it = partitions_memo.find(n);
    if (it != partitions_memo.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> acc;
    generate(n, n == 0 ? 1 : n, acc, out);
    std::sort(out.begin(), out.end());
    return partitions_memo.emplace(n, std::move(out)).first->second;
}

int partition_index(const Partition& lambda) {
    const auto& all = partitions_of(lambda.weight());
    auto it = std::lower_bound(all.begin(), all.end(), lambda);
    return static_cast<int>(it - all.begin());
}

int partition_count(int n) {
    if (n < 0) return 0;
    return static_cast<int>(partitions_of(n).size());
}

namespace {

// Multiplicities of the distinct part values, ascending by value.
std::vector<std::pair<int, int>> multiplicities(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    return {mult.begin(), mult.end()};
}

} // namespace

Rational z_constant(const Partition& lambda) {
    Rational z(1);
    for (int p : lambda.parts()) z *= Rational(p);
    for (const auto& [value, count] : multiplicities(lambda))
        z *= Rational::factorial(count);
    return z;
}

Rational u_constant(const Partition& lambda) {
    Rational u(1);
    for (const auto& [value, count] : multiplicities(lambda))
        u *= Rational::factorial(count);
    return u;
}

Rational t_constant(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("t_constant: undefined for the empty partition");
    const auto mult = multiplicities(lambda);
    const long l = lambda.length();
    Rational t(0);
    for (const auto& [j, alpha_j] : mult) {
        Rational term = Rational(j) / Rational::factorial(alpha_j - 1);
        term *= Rational::factorial(l - 1);
        for (const auto& [i, alpha_i] : mult) {
            if (i == j) continue;
            term /= Rational::factorial(alpha_i);
        }
        t += term;
    }
    return t;
}

SymmetryConstants symmetry_constants(const Partition& lambda) {
    return {z_constant(lambda), u_constant(lambda), t_constant(lambda)};
}

std::vector<std::pair<Cell, BiPoly>> cells_and_weight(const Partition& lambda) {
    std::vector<std::pair<Cell, BiPoly>> out;
    for (const Cell& c : lambda.cells()) out.emplace_back(c, c.weight());
    return out;
}

} // namespace hilbfock
