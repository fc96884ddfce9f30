#include "doctest_main.hpp"

#include "cebar/koszul.hpp"

using namespace cebar;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

KElem k1(TWord a, TWord c, Q q = 1) { return KElem({std::move(a), std::move(c)}, q); }

}  // namespace

TEST_CASE("dual coalgebra pieces") {
    KoszulComplex K2(symmetric_data(2));
    CHECK(K2.dual_piece(0).size() == 1);
    CHECK(K2.dual_piece(1).size() == 2);
    REQUIRE(K2.dual_piece(2).size() == 1);
    CHECK(K2.dual_piece(3).empty());
    // the piece in arity 2 is R itself
    auto r = K2.dual_piece(2)[0];
    CHECK(r.coeff({0, 1}) == -r.coeff({1, 0}));
    CHECK(r.coeff({0, 0}) == 0);
    for (int d = 1; d <= 3; ++d) {
        KoszulComplex K(symmetric_data(d));
        for (int n = 0; n <= 4; ++n) CHECK(static_cast<long>(K.dual_piece(n).size()) == binom(d, n));
        KoszulComplex F(full_data(d));
        for (int n = 0; n <= 3; ++n) {
            long p = 1;
            for (int i = 0; i < n; ++i) p *= d;
            CHECK(static_cast<long>(F.dual_piece(n).size()) == p);
        }
    }
}

TEST_CASE("Koszul differential examples") {
    KoszulComplex K(symmetric_data(2));
    CHECK(K.d(k1({}, {0})) == k1({0}, {}));
    KElem r = k1({}, {0, 1}) - k1({}, {1, 0});
    CHECK(K.d(r) == K.normal(k1({0}, {1}) - k1({1}, {0})));
    CHECK(K.d(K.d(r)).zero());
    // x1 x2 = x2 x1 in A
    CHECK(K.normal(k1({0, 1}, {}) - k1({1, 0}, {})).zero());
}

TEST_CASE("right action examples") {
    KoszulComplex K(symmetric_data(2));
    KElem r = k1({}, {0, 1}) - k1({}, {1, 0});
    CHECK(K.act(r, Tensor(TWord{})) == r);
    CHECK(K.act(r, Tensor(TWord{1})) == k1({}, {0}));
    CHECK(K.act(r, Tensor(TWord{0, 1, 0})).zero());
    CHECK(dual_product(Tensor(TWord{0}), Tensor(TWord{1})) == Tensor(TWord{1, 0}));
}

TEST_CASE("dg bimodule residuals vanish") {
    for (int d : {2, 3}) {
        auto rep = KoszulComplex(symmetric_data(d)).residuals(3);
        CHECK(rep.checked > 0);
        CHECK(rep.failures.empty());
        auto full = KoszulComplex(full_data(d)).residuals(d == 2 ? 3 : 2);
        CHECK(full.failures.empty());
    }
    // a non-symmetric relation set
    QuadraticData q{2, {Tensor(TWord{0, 1}) + Tensor(TWord{1, 0}) * Q(2)}};
    auto rep = KoszulComplex(q).residuals(3);
    CHECK(rep.failures.empty());
}

TEST_CASE("isomorphism with the abelian Chevalley-Eilenberg complex") {
    for (int d : {2, 3}) {
        auto rep = ce_isomorphism_check(d, d, 2);
        CHECK(rep.checked > 0);
        for (auto& f : rep.failures) MESSAGE(f.check << " " << f.input << " -> " << f.residual);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("quadratic data JSON") {
    auto q = symmetric_data(3);
    auto text = quadratic_to_json(q);
    auto p = quadratic_from_json(text);
    CHECK(quadratic_to_json(p) == text);
    CHECK(p.R.size() == 3);
    CHECK_THROWS_AS(quadratic_from_json("{\"dimV\":2,\"R\":[[{\"i\":0,\"j\":2,\"c\":\"1\"}]]}"), SchemaError);
    CHECK_THROWS_AS(quadratic_from_json("{\"dimV\":2,\"R\":[[{\"i\":0,\"j\":1,\"c\":\"1\"}],"
                                        "[{\"i\":0,\"j\":1,\"c\":\"2\"}]]}"),
                    SchemaError);
    CHECK_THROWS_AS(quadratic_from_json("{\"R\":[]}"), SchemaError);
}
