#pragma once

#include "cebar/uea.hpp"

#include <map>
#include <memory>

namespace cebar {

enum class Variant { Actual, Modified };
std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);  // "actual" | "modified"

// Power series in one variable truncated after t^N; index = exponent.
using Series = std::vector<Q>;
Series series_mul(const Series& a, const Series& b);
Series series_exp(const Series& a);  // a[0] must be 0
Series series_log(const Series& a);  // a[0] must be 1

// c_k, k = 0..N, of (1/2) log((1 - e^{-t}) / t); c_0 = 0.
Series duflo_log_coeffs(int N);

// Constant-coefficient operators are stored as Sparse with the x part naming the partials.
Sparse apply_operator(const Sparse& op, const Sparse& a);
// exp(sum_k c_k T_k(d)) truncated at order max_order; sign = -1 gives the inverse.
Sparse duflo_operator(const LieAlgebra& g, Variant v, int max_order, int sign = 1);

int max_degree(const Sparse& a);

// Star product on S(g) pulled back from U(g) through I = symmetrize o sqrt(J).
class StarAlgebra {
public:
    StarAlgebra(LieAlgebra g, Variant v);

    const LieAlgebra& algebra() const { return U_.algebra(); }
    const Uea& uea() const { return U_; }
    Variant variant() const { return v_; }

    Sparse sqrtJ(const Sparse& a, int sign = 1) const;
    Sparse iso(const Sparse& a) const;
    Sparse iso_inverse(const Sparse& u) const;
    Sparse star(const Sparse& a, const Sparse& b) const;
    Q chi(const Sparse& a) const;

    // D(x_i) = tr(ad x_i), extended as a derivation of S(g).
    Sparse c1_derivation(const Sparse& a) const;
    Sparse c1_derivation_residual(const Sparse& a, const Sparse& b) const;
    // exp(t D) truncated at the degree of a.
    Sparse exp_c1(const Sparse& a, const Q& t) const;

private:
    const Sparse& op(int order, int sign) const;
    const Sparse& star_words(const Word& a, const Word& b) const;

    Uea U_;
    Variant v_;
    mutable std::map<std::pair<int, int>, Sparse> ops_;
    mutable std::map<std::pair<Word, Word>, Sparse> star_cache_;
};

}  // namespace cebar
