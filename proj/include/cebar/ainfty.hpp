#pragma once

#include "cebar/core.hpp"

#include <functional>

namespace cebar {

// A bimodule basis element is a tuple of words (one word for plain modules, several for
// tensor products such as a (x) (a_1|...|a_q) (x) k).
using Key = std::vector<Word>;
using Vec = Lin<Key>;
using Args = std::vector<Word>;

struct ComponentUnavailable : std::runtime_error {
    ComponentUnavailable(int m, int n, const std::string& why)
        : std::runtime_error("component (" + std::to_string(m) + "," + std::to_string(n) + ") unavailable: " + why),
          m(m), n(n) {}
    int m, n;
};

// Taylor components act on shifted arguments; results are read in the shifted target.
struct TaylorAlgebra {
    std::function<int(const Word&)> degree;
    std::function<Sparse(const Args&)> d;
};

struct TaylorBimodule {
    std::function<int(const Key&)> degree;
    std::function<Vec(const Args& a, const Key& k, const Args& b)> d;
};

struct BimoduleMorphism {
    std::function<Vec(const Args& a, const Key& k, const Args& b)> phi;
};

// Sign of m^N = (-1)^{N(N-1)/2} s^{-1} o d^N o s^{(x)N} on arguments of the given (unshifted)
// degrees, including the Koszul sign of s^{(x)N}. The same sign converts back.
Q md_sign(const std::vector<int>& degrees);

using Op = std::function<Sparse(const Args&)>;
Op m_from_d(Op d, std::function<int(const Word&)> degree);
Op d_from_m(Op m, std::function<int(const Word&)> degree);

// d^1 = s d s^{-1}, d^2 = -s m (s^{-1})^{(x)2}.
TaylorAlgebra dg_algebra(std::function<int(const Word&)> degree, std::function<Sparse(const Word&)> diff,
                         std::function<Sparse(const Word&, const Word&)> product);

// d^{0,0} = s d s^{-1}, d^{1,0} = -s m_L (s^{-1})^{(x)2}, d^{0,1} = -s m_R (s^{-1})^{(x)2}.
TaylorBimodule dg_bimodule(const TaylorAlgebra& A, std::function<int(const Key&)> degree,
                           std::function<Vec(const Key&)> diff, std::function<Vec(const Word&, const Key&)> left,
                           std::function<Vec(const Key&, const Word&)> right);

// d_A^{m,n} = d_A^{m+n+1}; keys are single words.
TaylorBimodule algebra_as_bimodule(const TaylorAlgebra& A);

// K1 (x) T(B[1]) (x) K2 with keys [k1, b_1, ..., b_q, k2]; K1 and K2 must have single-word keys.
TaylorBimodule tensor_bimodule(const TaylorBimodule& K1, const TaylorAlgebra& B, const TaylorBimodule& K2);

// mu from A (x)_A K to K.
BimoduleMorphism mu_morphism(const TaylorAlgebra& A, const TaylorBimodule& K);
BimoduleMorphism identity_morphism();
BimoduleMorphism strict_morphism(std::function<Vec(const Key&)> f);

// K[1]-component of d_K o d_K on (a_1|...|a_m|k|b_1|...|b_n).
Vec bimodule_square_residual(const TaylorAlgebra& A, const TaylorAlgebra& B, const TaylorBimodule& K, const Args& a,
                             const Key& k, const Args& b);

// K2[1]-component of phi o d_{K1} - d_{K2} o phi on the same kind of tuple.
Vec morphism_residual(const TaylorAlgebra& A, const TaylorAlgebra& B, const TaylorBimodule& K1,
                      const TaylorBimodule& K2, const BimoduleMorphism& phi, const Args& a, const Key& k,
                      const Args& b);

Vec lift(const Sparse& s);  // words -> single-word keys

}  // namespace cebar
