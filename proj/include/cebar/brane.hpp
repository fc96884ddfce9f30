#pragma once

#include "cebar/ainfty.hpp"
#include "cebar/duflo.hpp"

#include <optional>

namespace cebar {

// Admissible graphs: vertices 0..n-1 are of the first type, then k vertices carrying the
// A-arguments, then l vertices carrying the B-arguments. Edges leave first-type and B vertices
// and land on first-type and A vertices.
struct AdmissibleGraph {
    int n = 0, k = 0, l = 0;
    std::vector<int> adeg, bdeg;
    std::vector<std::pair<int, int>> edges;
};

std::vector<AdmissibleGraph> graph_filter(int n, int k, int l, const std::vector<int>& adeg,
                                          const std::vector<int>& bdeg);
// Every degree profile with sum(bdeg) = 2n+k+l-1 - 2n worth of sources and A-degrees bounded by the edge count.
std::vector<AdmissibleGraph> graph_filter_all(int n, int k, int l);
// Cycle lengths when the graph is a disjoint union of wheels around a single A vertex.
std::optional<std::vector<int>> wheel_cycles(const AdmissibleGraph& G);
std::string render_graph(const AdmissibleGraph& G);

struct DegreeCertificate {
    int n, p;
    int degree;  // -n-p+1
    bool infeasible;
};
DegreeCertificate a_inf_2_certificate(int n, int p);

// Deformed brane K = ground field over (S(g), star) and (wedge g*, d). Bar elements
// a (x) (a~_1|...|a~_q) (x) 1 are keys {a, a~_1, ..., a~_q, 1} of x-words.
class Brane {
public:
    // weights[p-1] = w_p for the undeformed components m^{p,1}.
    Brane(LieAlgebra g, Variant v, std::vector<int> weights);
    Brane(const Brane&) = delete;
    Brane& operator=(const Brane&) = delete;

    const StarAlgebra& star() const { return S_; }
    const LieAlgebra& algebra() const { return S_.algebra(); }
    const std::vector<int>& weights() const { return w_; }

    const TaylorAlgebra& A() const { return A_; }
    const TaylorAlgebra& B() const { return B_; }
    const TaylorBimodule& K() const { return K_; }
    const TaylorBimodule& AB() const { return AB_; }       // S(g) (x) wedge(g) with the pulled back d
    const TaylorBimodule& bar() const { return bar_; }     // explicit components
    TaylorBimodule bar_generic() const;                    // tensor product of A and K

    // Shifted components of K, evaluated on x-words (A) and dth-words (B).
    Vec k_component(const Args& a, const Args& b) const;
    Vec bar_d(const Args& a, const Key& key, const Args& b) const;

    Vec phi(const Sparse& e) const;
    BimoduleMorphism phi_morphism() const;

    Sparse pullback_d(const Sparse& e) const;
    Sparse literal_d(const Sparse& e) const;
    Sparse left(const Sparse& a1, const Sparse& e) const;  // (a1 star a) th^I

    Vec a_inf_1_residual(const Word& eta, const Word& b) const;
    Vec a_inf_2_residual(const Word& eta, const Args& bs) const;
    Q mu_phi_composite(const Sparse& e) const;

private:
    Sparse iso_inverse_word(const std::vector<int>& x) const;

    StarAlgebra S_;
    std::vector<int> w_;
    TaylorAlgebra A_, B_;
    TaylorBimodule K_, AB_, bar_;
    mutable std::map<std::vector<int>, Sparse> inv_cache_;
};

TaylorAlgebra cochain_algebra(const LieAlgebra& g);

// Pairing of a dth-word with the normalized alternation of th_{i_1} ... th_{i_p}.
Q wedge_pairing(const std::vector<int>& idx, const Word& b);

// w_1..w_pmax from the probe th_1...th_p, dth_1...dth_p on the abelian algebra of dimension pmax.
struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
std::vector<int> calibrate_wp(int pmax);

std::string render_bar(const Vec& v, const LieAlgebra& g);
std::string render_key(const Key& k, const LieAlgebra& g);

}  // namespace cebar
