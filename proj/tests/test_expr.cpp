#include "doctest_main.hpp"

#include "cebar/ce.hpp"
#include "cebar/expr.hpp"

#include <random>

using namespace cebar;

TEST_CASE("parse examples") {
    auto h = catalog("heisenberg3");
    Sparse e(xw({0, 1}));
    e.add(xw({2}), Q(1, 2));
    CHECK(parse_expression("x1*x2 + 1/2*x3", h) == e);
    CHECK(parse_expression("th[1,2]", h) == Sparse(thw({0, 1})));
    CHECK(parse_expression("th[2,1]", h) == Sparse(thw({0, 1}), -1));
    CHECK(parse_expression("-x1^2 th[1]", h) == Sparse(Word{{0, 0}, {0}, {}}, -1));
    CHECK(parse_expression("2*(x1 - x2)", h) == Sparse(xw({0}), 2) - Sparse(xw({1}), 2));
    CHECK(parse_expression("th[1]*th[1]", h).zero());
    CHECK(parse_expression("dth[2]*th[1]", h) == Sparse(Word{{}, {0}, {1}}, -1));
    CHECK(parse_expression("3/6", h) == Sparse(Word{}, Q(1, 2)));
}

TEST_CASE("parse errors carry positions") {
    auto h = catalog("heisenberg3");
    auto pos = [&](const std::string& s) -> long {
        try {
            parse_expression(s, h);
        } catch (const ParseError& e) {
            return static_cast<long>(e.pos);
        }
        return -1;
    };
    CHECK(pos("th[1,1]") == 5);
    CHECK(pos("x1 + y") == 5);
    CHECK(pos("1/0*x1") == 0);
    CHECK(pos("th[4]") == 3);
    CHECK(pos("x1 +") == 4);
    CHECK(pos("(x1") == 3);
    CHECK(pos("x1 )") == 3);
}

TEST_CASE("render and parse round trip") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-9, 9);
    for (auto& n : catalog_names()) {
        auto g = catalog(n);
        auto basis = ce_basis(g.dim(), 3);
        for (int trial = 0; trial < 50; ++trial) {
            Sparse e;
            for (int t = 0; t < 4; ++t) {
                Word w = basis[rng() % basis.size()];
                if (rng() % 2) w.dth = subsets(g.dim(), g.dim())[rng() % (1u << g.dim())];
                Q q(c(rng), 1 + rng() % 4);
                q.canonicalize();
                e.add(w, q);
            }
            auto text = render(e, g);
            CHECK_MESSAGE(parse_expression(text, g) == e, text);
        }
    }
    auto h = catalog("heisenberg3");
    CHECK(render(Sparse(), h) == "0");
    CHECK(render(Sparse(Word{{0, 0, 2}, {0, 2}, {1}}), h) == "x1^2*x3 th[1,3] dth[2]");
    CHECK(render(Sparse(xw({1}), -1) + Sparse(Word{}, Q(1, 2)), h) == "1/2 - x2");
}
