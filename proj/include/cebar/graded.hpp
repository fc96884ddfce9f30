#pragma once

#include "cebar/lie.hpp"

namespace cebar {

enum class OddKind { Theta, DTheta, Even, Mixed, Zero };
OddKind odd_kind(const Sparse& e);

// Graded commutative product of two theta-polynomials or two dtheta-polynomials.
Sparse wedge(const Sparse& u, const Sparse& v);

// Left action of the dtheta-monomial D on the theta part of f: dth_{j1} o ... o dth_{jp},
// each a left graded derivation. Coefficients in the x part are carried along.
Sparse contract(const Sparse& f, const Word& D);
Sparse contract(const Sparse& f, const Sparse& D);

// Cochain differential on wedge(g*): dth_i -> sum_{j<k} f_{jk}^i dth_j dth_k, extended as a
// left graded derivation.
Sparse ce_cochain_d(const LieAlgebra& g, const Sparse& b);

// d(d(dth_i)) for every generator.
std::vector<Sparse> d_square_residual(const LieAlgebra& g);

}  // namespace cebar
