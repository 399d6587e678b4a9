#pragma once

#include <optional>
#include <vector>

#include "ehrlift/rational.hpp"

namespace ehrlift {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<long long>;
using ZMat = std::vector<ZVec>;

int mat_rank(QMat a);

// One solution of A x = b, or nullopt if inconsistent. Free variables get 0.
std::optional<QVec> solve_linear(QMat a, QVec b);

// Row basis of {x : A x = 0}.
QMat nullspace(const QMat& a);

// Scales to coprime integers; sign of the first nonzero entry preserved.
ZVec primitive(const QVec& v);

// Z-basis of {x in Z^n : A x = 0} (rows), via Smith reduction of A.
ZMat integer_kernel(const ZMat& a);

inline ZVec unit_ll(int n, int i) {
    ZVec e(n, 0);
    e[i] = 1;
    return e;
}

Rat dot(const QVec& a, const QVec& b);
Rat dotz(const ZVec& a, const QVec& b);
long long dotzz(const ZVec& a, const ZVec& b);

}  // namespace ehrlift
