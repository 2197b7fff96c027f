#pragma once

#include <string>

#include "hilbfock/matrix.hpp"
#include "hilbfock/operators.hpp"

namespace hilbfock {

/// nak(lambda) = q_{lambda_l} o ... o q_{lambda_1} (vacuum). Coordinates
/// are asserted polynomial (the creation operators stay in the
/// non-localized ring).
FockClass nak_class(const Partition& lambda, Truncation t);

/// es(lambda) = q_{lambda_1,X} o ... o q_{lambda_l,X} (vacuum) / u_lambda,
/// the Bialynicki-Birula cell closure class. Coordinates asserted
/// polynomial.
FockClass es_class(const Partition& lambda, Truncation t);

struct NakEs {
    FockClass nak;
    FockClass es;
};

NakEs nak_es_classes(const Partition& lambda, Truncation t);

enum class Basis { fix, nak, es };

Basis parse_basis(const std::string& name);
std::string basis_name(Basis b);

/// p(n) x p(n) base-change matrix: columns indexed by the source basis,
/// rows by the target, both in canonical partition order. Column lambda
/// holds the coordinates of the source element lambda in the target
/// basis, so M(from->to) M(to->from) = Id.
Mat basis_matrix(int n, Basis from, Basis to);

/// Entrywise value at U=V=0. Throws IntegralityError ("basis coordinates
/// not integral") when an entry has a true denominator.
std::vector<std::vector<Rational>> classical_projection(const Mat& m);

} // namespace hilbfock
