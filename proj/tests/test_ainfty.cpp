#include "doctest_main.hpp"

#include "cebar/ainfty.hpp"
#include "cebar/ce.hpp"

#include <memory>
#include <random>

using namespace cebar;

namespace {

TaylorAlgebra cochains(const LieAlgebra& g) {
    return dg_algebra([](const Word& w) { return static_cast<int>(w.dth.size()); },
                      [g](const Word& w) { return ce_cochain_d(g, Sparse(w)); },
                      [](const Word& a, const Word& b) { return wedge(Sparse(a), Sparse(b)); });
}

TaylorAlgebra enveloping(std::shared_ptr<Uea> U) {
    return dg_algebra([](const Word&) { return 0; }, [](const Word&) { return Sparse(); },
                      [U](const Word& a, const Word& b) { return U->product(Sparse(a), Sparse(b)); });
}

TaylorBimodule ce_bimodule(std::shared_ptr<Uea> U, const TaylorAlgebra& A) {
    return dg_bimodule(
        A, [](const Key& k) { return -static_cast<int>(k.at(0).th.size()); },
        [U](const Key& k) { return lift(d_CE(*U, Sparse(k.at(0)))); },
        [U](const Word& a, const Key& k) { return lift(m_L(*U, Sparse(a), Sparse(k.at(0)))); },
        [](const Key& k, const Word& b) { return lift(m_R(Sparse(k.at(0)), Sparse(b))); });
}

std::vector<Word> dth_words(int dim, int maxsize) {
    std::vector<Word> out;
    for (auto& s : subsets(dim, maxsize)) out.push_back(dthw(s));
    return out;
}

// All (a|k|b) with m + n <= maxargs.
template <class F>
void for_tuples(const std::vector<Word>& as, const std::vector<Key>& ks, const std::vector<Word>& bs, int maxargs,
                F f) {
    for (int m = 0; m <= maxargs; ++m)
        for (int n = 0; m + n <= maxargs; ++n) {
            std::vector<Args> A{{}}, B{{}};
            for (int i = 0; i < m; ++i) {
                std::vector<Args> next;
                for (auto& p : A)
                    for (auto& w : as) { auto q = p; q.push_back(w); next.push_back(q); }
                A = next;
            }
            for (int i = 0; i < n; ++i) {
                std::vector<Args> next;
                for (auto& p : B)
                    for (auto& w : bs) { auto q = p; q.push_back(w); next.push_back(q); }
                B = next;
            }
            for (auto& a : A)
                for (auto& k : ks)
                    for (auto& b : B) f(a, k, b);
        }
}

}  // namespace

TEST_CASE("suspension sign") {
    CHECK(md_sign({}) == 1);
    CHECK(md_sign({0}) == 1);
    CHECK(md_sign({0, 0}) == -1);
    CHECK(md_sign({1, 0}) == 1);
    CHECK(md_sign({0, 1}) == -1);
    CHECK(md_sign({0, 0, 0}) == -1);
    CHECK(md_sign({0, 0, 1}) == -1);
}

TEST_CASE("m and d conversions are inverse") {
    std::mt19937 rng(7);
    auto degree = [](const Word& w) { return static_cast<int>(w.dth.size()); };
    Op d = [](const Args& v) {
        Sparse out;
        Word w;
        for (auto& a : v) w.dth.insert(w.dth.end(), a.dth.begin(), a.dth.end());
        out.add(w, static_cast<long>(v.size()) + 2);
        return out;
    };
    Op back = d_from_m(m_from_d(d, degree), degree);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 5);
        Args v;
        for (int i = 0; i < n; ++i) {
            Word w;
            int len = static_cast<int>(rng() % 3);
            for (int j = 0; j < len; ++j) w.dth.push_back(static_cast<int>(rng() % 4));
            v.push_back(w);
        }
        CHECK(back(v) == d(v));
    }
}

TEST_CASE("dg cochain algebra satisfies the A-infinity relations") {
    for (auto name : {"heisenberg3", "sl2", "aff1"}) {
        auto g = catalog(name);
        auto B = cochains(g);
        auto M = algebra_as_bimodule(B);
        auto ws = dth_words(g.dim(), 2);
        std::vector<Key> ks;
        for (auto& w : ws) ks.push_back(Key{w});
        long n = 0;
        for_tuples(ws, ks, ws, 2, [&](const Args& a, const Key& k, const Args& b) {
            ++n;
            CHECK(bimodule_square_residual(B, B, M, a, k, b).zero());
        });
        CHECK(n > 0);
    }
}

TEST_CASE("Chevalley-Eilenberg complex as a dg bimodule") {
    for (auto name : {"heisenberg3", "sl2"}) {
        auto U = std::make_shared<Uea>(catalog(name));
        auto A = enveloping(U);
        auto B = cochains(U->algebra());
        auto K = ce_bimodule(U, A);
        std::vector<Word> as = monomials(3, 1);
        std::vector<Key> ks;
        for (auto& w : ce_basis(3, 2)) ks.push_back(Key{w});
        for_tuples(as, ks, dth_words(3, 2), 2, [&](const Args& a, const Key& k, const Args& b) {
            auto r = bimodule_square_residual(A, B, K, a, k, b);
            CHECK(r.zero());
        });
        // a bimodule map to itself
        auto id = identity_morphism();
        for (auto& k : ks) CHECK(morphism_residual(A, B, K, K, id, {xw({0})}, k, {}).zero());
    }
}

TEST_CASE("ground field as a bimodule over the undeformed algebras") {
    // m^{1,0} = eps, m^{0,1} = eps_B, m^{1,1}(a, 1, dth_j) = coefficient of x_j in a
    auto degree = [](const Word& w) { return static_cast<int>(w.dth.size()); };
    TaylorAlgebra A = dg_algebra([](const Word&) { return 0; }, [](const Word&) { return Sparse(); },
                                 [](const Word& a, const Word& b) { return word_product_commutative(a, b); });
    TaylorAlgebra B = dg_algebra(degree, [](const Word&) { return Sparse(); },
                                 [](const Word& a, const Word& b) { return wedge(Sparse(a), Sparse(b)); });
    const Key one{Word{}};
    TaylorBimodule K;
    K.degree = [](const Key&) { return 0; };
    K.d = [&](const Args& a, const Key&, const Args& b) {
        Vec out;
        if (a.size() == 1 && b.empty() && a[0].empty()) out.add(one, 1);
        if (a.empty() && b.size() == 1 && b[0].empty()) out.add(one, 1);
        if (a.size() == 1 && b.size() == 1 && a[0].x.size() == 1 && b[0].dth.size() == 1 &&
            a[0].x[0] == b[0].dth[0])
            out.add(one, md_sign({0, 0, 1}));
        return out;
    };
    auto as = monomials(2, 2);
    auto bs = dth_words(2, 2);
    for_tuples(as, {one}, bs, 3, [&](const Args& a, const Key& k, const Args& b) {
        CHECK(bimodule_square_residual(A, B, K, a, k, b).zero());
    });
    // a pairing that also sees x_j^2 is not a derivation at 0 and breaks the relation
    TaylorBimodule K0 = K;
    K0.d = [&](const Args& a, const Key& k, const Args& b) {
        Vec out = K.d(a, k, b);
        if (a.size() == 1 && b.size() == 1 && a[0].x.size() == 2 && b[0].dth.size() == 1 &&
            a[0].x[0] == b[0].dth[0] && a[0].x[1] == b[0].dth[0])
            out.add(one, 1);
        return out;
    };
    CHECK(bimodule_square_residual(A, B, K0, {xw({0}), xw({0})}, one, {dthw({0})}).zero() == false);
    // the zero bimodule
    TaylorBimodule Z{[](const Key&) { return 0; }, [](const Args&, const Key&, const Args&) { return Vec(); }};
    CHECK(bimodule_square_residual(A, B, Z, {xw({0})}, one, {dthw({1})}).zero());
}

TEST_CASE("relative tensor product with the algebra and the multiplication map") {
    auto U = std::make_shared<Uea>(catalog("sl2"));
    auto A = enveloping(U);
    auto B = cochains(U->algebra());
    auto K = ce_bimodule(U, A);
    auto T = tensor_bimodule(algebra_as_bimodule(A), A, K);
    auto mu = mu_morphism(A, K);
    std::vector<Word> as = monomials(3, 1);
    std::vector<Key> ks;
    for (auto& a : as)
        for (auto& e : ce_basis(3, 1)) {
            ks.push_back(Key{a, e});
            for (auto& t : monomials(3, 1, 1)) ks.push_back(Key{a, t, e});
        }
    ks.push_back(Key{xw({0}), xw({1}), xw({2}), thw({0})});
    for_tuples(as, ks, dth_words(3, 1), 1, [&](const Args& a, const Key& k, const Args& b) {
        CHECK(bimodule_square_residual(A, B, T, a, k, b).zero());
        CHECK(morphism_residual(A, B, T, K, mu, a, k, b).zero());
    });
    // mu on a (x) () (x) k is the left action
    Key k{xw({1}), thw({0})};
    CHECK(mu.phi({}, k, {}) == lift(m_L(*U, Sparse(xw({1})), Sparse(thw({0})))));
    // bar differential of 1 (x) (a) (x) k
    Vec d = T.d({}, Key{Word{}, xw({0}), thw({})}, {});
    Vec expect;
    expect.add(Key{xw({0}), Word{}}, 1);
    expect.add(Key{Word{}, xw({0})}, -1);
    CHECK(d == expect);
}
