#pragma once

#include "cebar/lie.hpp"
#include "cebar/linalg.hpp"

#include <map>
#include <memory>

namespace cebar {

using TWord = std::vector<int>;
using Tensor = Lin<TWord>;                     // element of T(V) or T(V*)
using KKey = std::pair<TWord, TWord>;          // (word in A, word in the dual coalgebra)
using KElem = Lin<KKey>;

struct QuadraticData {
    int dimV = 0;
    std::vector<Tensor> R;  // each a combination of length-2 words
};

QuadraticData quadratic_from_json(const std::string& text);
std::string quadratic_to_json(const QuadraticData& q);
// R spanned by e_i e_j - e_j e_i, i < j.
QuadraticData symmetric_data(int dimV);
// R = V (x) V.
QuadraticData full_data(int dimV);

// Dense coordinates of a homogeneous tensor of length n.
QVec tensor_coords(const Tensor& t, int dimV, int n);
Tensor tensor_from_coords(const QVec& v, int dimV, int n);

// Opposite product on the dual algebra: phi * psi = psi (x) phi.
Tensor dual_product(const Tensor& phi, const Tensor& psi);

std::string render_kelem(const KElem& k);

struct KoszulResidual {
    std::string check;
    std::string input;
    std::string residual;
};

struct KoszulReport {
    long checked = 0;
    std::vector<KoszulResidual> failures;
};

// Koszul complex A (x) A^! dual with A = T(V)/(R).
class KoszulComplex {
public:
    explicit KoszulComplex(QuadraticData q);

    const QuadraticData& data() const { return q_; }
    // Basis of the intersection of V^i (x) R (x) V^{n-2-i}.
    const std::vector<Tensor>& dual_piece(int n) const;
    // Normal form of a tensor in A (reduced modulo the ideal in each length).
    Tensor reduce_A(const Tensor& a) const;
    KElem normal(const KElem& k) const;

    KElem d(const KElem& k) const;
    KElem act(const KElem& k, const Tensor& phi) const;
    KElem left(const Tensor& a, const KElem& k) const;

    // Associativity of the right action, commutation of the two actions, compatibility of d
    // with the right action and d o d, on basis elements with A-length <= adeg.
    KoszulReport residuals(int Nmax, int adeg = 2) const;

private:
    const Subspace& ideal(int n) const;

    QuadraticData q_;
    mutable std::map<int, std::vector<Tensor>> pieces_;
    mutable std::map<int, std::unique_ptr<Subspace>> ideals_;
};

// Symmetric data on dimV generators against the abelian Chevalley-Eilenberg complex:
// x^a th^I -> x^a (x) sum_s sgn(s) e_{I s}, dth_j -> -e_j^* into the opposite dual algebra.
KElem ce_to_koszul(const KoszulComplex& K, const Word& w);
Tensor dth_to_dual(const std::vector<int>& J);
KoszulReport ce_isomorphism_check(int dimV, int Nmax, int adeg = 2);

}  // namespace cebar
