#pragma once

#include "cebar/lie.hpp"

#include <map>
#include <utility>

namespace cebar {

struct Letter {
    bool odd;
    int idx;
};

// U(g), and U(g^) = U(g) (x) wedge(g) with [x_i, th_j] = f_{ij}^k th_k, in PBW normal form
// (x indices nondecreasing, then th indices increasing). Caches are per instance.
class Uea {
public:
    explicit Uea(LieAlgebra g) : g_(std::move(g)) {}

    const LieAlgebra& algebra() const { return g_; }

    Sparse normal_form(const std::vector<Letter>& word) const;
    Sparse normal_form(const Sparse& raw_words_as_letters) const;  // each word read as x... then th...
    Sparse product(const Sparse& u, const Sparse& v) const;
    Sparse mul_letter(const Sparse& u, Letter l) const;
    Q epsilon(const Sparse& u) const;

    Sparse symmetrize(const Sparse& a) const;
    Sparse symmetrize_inverse(const Sparse& u) const;

    // Derivation of degree 1 on U(g^) with x_i -> 0, th_i -> x_i.
    Sparse dK_hat(const Sparse& e) const;

private:
    Sparse mul_x(const Word& w, int j) const;
    Sparse mul_th(const Word& w, int k) const;
    const Sparse& sym_monomial(const std::vector<int>& sorted) const;

    LieAlgebra g_;
    mutable std::map<std::pair<Word, int>, Sparse> mulx_cache_;
    mutable std::map<std::vector<int>, Sparse> sym_cache_;
};

std::vector<Letter> letters_of(const Word& w);

}  // namespace cebar
