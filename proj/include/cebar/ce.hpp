#pragma once

#include "cebar/graded.hpp"
#include "cebar/uea.hpp"

namespace cebar {

// Elements u th^I of U(g)[th] use Word::x for the PBW part and Word::th for I.
Sparse d_CE(const Uea& U, const Sparse& e);
// Only the bracket part of d_CE with u = 1 (also used on theta-polynomials).
Sparse d2_coalgebra(const LieAlgebra& g, const Sparse& t);
Sparse m_L(const Uea& U, const Sparse& u1, const Sparse& e);
Sparse m_R(const Sparse& e, const Sparse& b);

// d(dth^I(th^J)) - (d dth^I)(th^J) - (-1)^{|I|} dth^I(d th^J); I, J increasing, 0-based.
Sparse leibniz_residual(const Uea& U, const std::vector<int>& I, const std::vector<int>& J);

// Projection to theta-degree -1 followed by g -> U(g).
Sparse twisting_kappa(const Sparse& t);
// First part of d_CE rebuilt from kappa and the unshuffle coproduct of wedge(g).
Sparse d_kappa(const Uea& U, const Sparse& e);

struct CohomologyRow {
    int degree;
    int filtration;
    int dim;
    int rank_in;   // rank of d into this degree
    int rank_out;  // rank of d out of this degree
    int dim_H;
    bool stable;   // cocycles from filtration N-1 bound within N (negative degrees)
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complex spanned by x^alpha th^I with |alpha| + |I| <= N.
std::vector<CohomologyRow> truncated_cohomology(const LieAlgebra& g, int N, long budget = 200000);

// All PBW words x^alpha th^I with |alpha| + |I| <= N (alpha nondecreasing).
std::vector<Word> ce_basis(int dim, int N);
std::vector<Word> monomials(int dim, int maxdeg, int mindeg = 0);
std::vector<std::vector<int>> subsets(int dim, int maxsize, int minsize = 0);

}  // namespace cebar
