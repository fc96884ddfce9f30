#include "doctest_main.hpp"

#include "cebar/ce.hpp"
#include "cebar/duflo.hpp"

using namespace cebar;

namespace {

// Bernoulli numbers from sum_{j<=n} C(n+1, j) B_j = 0, B_0 = 1.
std::vector<Q> bernoulli(int n) {
    std::vector<Q> B(n + 1, Q(0));
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Q s = 0, binom = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            s += binom * B[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B[m] = -s / (m + 1);
    }
    return B;
}

// (1/2) log((1 - e^{-t})/t) = -t/4 + (1/2) sum_k B_{2k} t^{2k} / (2k (2k)!)
Series oracle_coeffs(int N) {
    auto B = bernoulli(N);
    Series c(N + 1, Q(0));
    if (N >= 1) c[1] = Q(-1, 4);
    Q fact = 1;
    for (int n = 1; n <= N; ++n) {
        fact *= n;
        if (n % 2 == 0) c[n] = B[n] / (2 * n * fact);
    }
    return c;
}

Sparse x(std::vector<int> v) { return Sparse(xw(std::move(v))); }
Sparse one() { return Sparse(Word{}); }

std::vector<Sparse> polys(int dim, int maxdeg) {
    std::vector<Sparse> out;
    for (auto& w : monomials(dim, maxdeg)) out.emplace_back(w);
    return out;
}

}  // namespace

TEST_CASE("log coefficients against the Bernoulli oracle") {
    auto c = duflo_log_coeffs(12);
    CHECK(c[0] == 0);
    CHECK(c[1] == Q(-1, 4));
    CHECK(c[2] == Q(1, 48));
    CHECK(c == oracle_coeffs(12));
    CHECK(c[3] == 0);
    CHECK(c[4] == Q(-1, 5760));
    CHECK_THROWS_AS(duflo_log_coeffs(0), ContractViolation);
    // exp(2 sum c_k t^k) = (1 - e^{-t})/t
    Series twice = c;
    for (auto& q : twice) q *= 2;
    auto e = series_exp(twice);
    Q f = 1;
    for (int n = 0; n <= 12; ++n) {
        f *= n + 1;
        CHECK(e[n] == Q(n & 1 ? -1 : 1) / f);
    }
}

TEST_CASE("Duflo operator") {
    for (auto v : {Variant::Actual, Variant::Modified}) {
        CHECK(duflo_operator(catalog("heisenberg3"), v, 6) == one());
        CHECK(duflo_operator(catalog("abelian3"), v, 6) == one());
    }
    CHECK(duflo_operator(catalog("aff1"), Variant::Actual, 1) == one() - x({0}) * Q(1, 4));
    CHECK(duflo_operator(catalog("aff1"), Variant::Modified, 1) == one());
    // aff1: tr((ad xi)^k) = xi_a^k, so sqrt(J) = exp(sum c_k d_a^k) exactly
    auto c = duflo_log_coeffs(5);
    Series lg(6, Q(0));
    for (int k = 1; k <= 5; ++k) lg[k] = c[k];
    auto e = series_exp(lg);
    Sparse expect;
    for (int k = 0; k <= 5; ++k) expect.add(xw(std::vector<int>(k, 0)), e[k]);
    CHECK(duflo_operator(catalog("aff1"), Variant::Actual, 5) == expect);
    // sign -1 is the inverse operator
    for (auto& n : catalog_names()) {
        auto g = catalog(n);
        for (auto v : {Variant::Actual, Variant::Modified}) {
            auto J = duflo_operator(g, v, 4), Ji = duflo_operator(g, v, 4, -1);
            for (auto& a : polys(g.dim(), 4)) CHECK(apply_operator(Ji, apply_operator(J, a)) == a);
        }
    }
}

TEST_CASE("isomorphism and star examples") {
    StarAlgebra H(catalog("heisenberg3"), Variant::Actual);
    CHECK(H.iso(x({0, 1})) == x({0, 1}) - x({2}) * Q(1, 2));
    CHECK(H.iso(one()) == one());
    StarAlgebra A(catalog("aff1"), Variant::Actual);
    CHECK(A.iso(x({0})) == x({0}) - one() * Q(1, 4));
    CHECK(H.star(x({0}), x({1})) == x({0, 1}) + x({2}) * Q(1, 2));
    CHECK(H.star(x({1}), x({0})) == x({0, 1}) - x({2}) * Q(1, 2));
    StarAlgebra S(catalog("sl2"), Variant::Actual);
    CHECK(S.star(x({1}), x({2})) - S.star(x({2}), x({1})) == x({0}));
    StarAlgebra B(catalog("abelian2"), Variant::Actual);
    CHECK(B.star(x({0, 1}), x({0})) == x({0, 0, 1}));
    CHECK(H.chi(one()) == 1);
    CHECK(A.chi(x({0})) == Q(-1, 4));
    CHECK(A.chi(x({1})) == 0);
    for (auto& a : polys(3, 3))
        if (!a.begin()->first.x.empty()) CHECK(H.chi(a) == 0);
}

TEST_CASE("star product properties") {
    for (auto& n : {"sl2", "aff1", "heisenberg3"})
        for (auto v : {Variant::Actual, Variant::Modified}) {
            StarAlgebra S(catalog(n), v);
            int d = S.algebra().dim();
            auto ps = polys(d, 3);
            for (auto& a : ps)
                for (auto& b : ps) {
                    auto ab = S.star(a, b);
                    CHECK(S.chi(ab) == S.chi(a) * S.chi(b));
                    for (auto& c : ps) CHECK_MESSAGE(S.star(ab, c) == S.star(a, S.star(b, c)), n);
                }
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Sparse br;
                    for (auto& t : S.algebra().bracket(i, j)) br.add(xw({t.k}), t.c);
                    CHECK(S.star(x({i}), x({j})) - S.star(x({j}), x({i})) == br);
                }
            for (auto& a : polys(d, 5)) CHECK(S.iso_inverse(S.iso(a)) == a);
            CHECK(S.chi(one()) == 1);
        }
}

TEST_CASE("trace derivation is a derivation of the star product") {
    for (auto& n : {"aff1", "sl2", "abelian2"})
        for (auto v : {Variant::Actual, Variant::Modified}) {
            StarAlgebra S(catalog(n), v);
            auto ps = polys(S.algebra().dim(), 3);
            for (auto& a : ps)
                for (auto& b : ps) CHECK_MESSAGE(S.c1_derivation_residual(a, b).zero(), n);
        }
    StarAlgebra A(catalog("aff1"), Variant::Actual);
    CHECK(A.c1_derivation(x({0, 0, 1})) == x({0, 1}) * Q(2));
    CHECK(A.c1_derivation(x({1})).zero());
}

TEST_CASE("variants are conjugate by the exponentiated trace derivation") {
    for (auto& n : {"aff1", "sl2", "heisenberg3"}) {
        StarAlgebra Act(catalog(n), Variant::Actual), Mod(catalog(n), Variant::Modified);
        auto ps = polys(Act.algebra().dim(), 3);
        for (auto& a : ps)
            for (auto& b : ps) {
                auto lhs = Act.star(a, b);
                auto rhs = Act.exp_c1(Mod.star(Act.exp_c1(a, Q(1, 4)), Act.exp_c1(b, Q(1, 4))), Q(-1, 4));
                CHECK_MESSAGE(lhs == rhs, n);
                // D is a derivation of the product, so the conjugation is trivial here
                CHECK(lhs == Mod.star(a, b));
            }
    }
}
