#include "cebar/suite.hpp"

#include "cebar/ce.hpp"
#include "cebar/expr.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace cebar {

using ojson = nlohmann::ordered_json;

namespace {

template <class F>
CheckRecord timed(CheckRecord r, F body) {
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CheckRecord make(const std::string& id, const std::string& algebra, const std::string& variant = "") {
    CheckRecord r;
    r.id = id;
    r.algebra = algebra;
    r.variant = variant;
    return r;
}

std::vector<Sparse> polys(int dim, int maxdeg) {
    std::vector<Sparse> out;
    for (auto& w : monomials(dim, maxdeg)) out.emplace_back(w);
    return out;
}

std::vector<Word> dth_words(int dim) {
    std::vector<Word> out;
    for (auto& s : subsets(dim, dim)) out.push_back(dthw(s));
    return out;
}

std::string word_text(const Word& w, const LieAlgebra& g) {
    std::string s = render_word(w, g.basis());
    return s.empty() ? "1" : s;
}

std::string names_of(const std::vector<int>& v, const LieAlgebra& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + g.basis()[v[i]];
    return s + ")";
}

void expect_zero(CheckRecord& r, const Sparse& res, const std::string& input, const LieAlgebra& g) {
    ++r.checked;
    if (!res.zero()) r.failures.push_back({input, render(res, g)});
}

void expect_zero(CheckRecord& r, const Vec& res, const std::string& input, const LieAlgebra& g) {
    ++r.checked;
    if (!res.zero()) r.failures.push_back({input, render_bar(res, g)});
}

std::string variant_of(const Brane& br) { return variant_name(br.star().variant()); }

}  // namespace

// ---------------------------------------------------------------- Lie algebra structure

CheckRecord check_jacobi(const LieAlgebra& g) {
    return timed(make("jacobi", g.name()), [&](CheckRecord& r) {
        for (auto& row : jacobi_residual(g)) {
            Sparse res;
            for (int k = 0; k < g.dim(); ++k) res.add(xw({k}), row.residual[k]);
            expect_zero(r, res, names_of({row.i, row.j, row.k}, g), g);
        }
    });
}

CheckRecord check_cochain_square(const LieAlgebra& g) {
    return timed(make("cochain-d-squared", g.name()), [&](CheckRecord& r) {
        auto res = d_square_residual(g);
        for (int i = 0; i < g.dim(); ++i) expect_zero(r, res[i], "dth[" + std::to_string(i + 1) + "]", g);
    });
}

CheckRecord check_ce_square(const LieAlgebra& g, int N) {
    auto r0 = make("ce-d-squared", g.name());
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        Uea U(g);
        for (auto& w : ce_basis(g.dim(), N)) expect_zero(r, d_CE(U, d_CE(U, Sparse(w))), word_text(w, g), g);
    });
}

CheckRecord check_leibniz(const LieAlgebra& g, int maxsize) {
    auto r0 = make("leibniz", g.name());
    r0.params["max_size"] = maxsize;
    return timed(r0, [&](CheckRecord& r) {
        Uea U(g);
        for (auto& I : subsets(g.dim(), maxsize))
            for (auto& J : subsets(g.dim(), maxsize))
                expect_zero(r, leibniz_residual(U, I, J), word_text(dthw(I), g) + " ; " + word_text(thw(J), g), g);
    });
}

CheckRecord check_dk_hat(const LieAlgebra& g, int N) {
    auto r0 = make("dk-hat-equals-ce", g.name());
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        Uea U(g);
        for (auto& w : ce_basis(g.dim(), N))
            expect_zero(r, U.dK_hat(Sparse(w)) - d_CE(U, Sparse(w)), word_text(w, g), g);
    });
}

CheckRecord check_cohomology(const LieAlgebra& g, int N) {
    auto r0 = make("truncated-cohomology", g.name());
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        ojson rows = ojson::array();
        for (auto& row : truncated_cohomology(g, N)) {
            rows.push_back({{"degree", row.degree},
                            {"filtration", row.filtration},
                            {"dim", row.dim},
                            {"rank_in", row.rank_in},
                            {"rank_out", row.rank_out},
                            {"dim_H", row.dim_H},
                            {"stable", row.stable}});
            if (row.degree < 0) {
                ++r.checked;
                if (!row.stable)
                    r.failures.push_back({"degree " + std::to_string(row.degree),
                                          "cocycles of filtration " + std::to_string(N - 1) + " not bounding"});
            }
        }
        r.data["rows"] = rows;
    });
}

// ---------------------------------------------------------------- Koszul

CheckRecord check_koszul(const QuadraticData& q, int max_arity) {
    auto r0 = make("koszul-quadratic", "dimV=" + std::to_string(q.dimV));
    r0.params["max_arity"] = max_arity;
    return timed(r0, [&](CheckRecord& r) {
        KoszulComplex K(q);
        ojson dims = ojson::array();
        for (int n = 0; n <= max_arity; ++n) dims.push_back(K.dual_piece(n).size());
        r.data["dual_dims"] = dims;
        auto rep = K.residuals(max_arity);
        r.checked = rep.checked;
        for (auto& f : rep.failures) r.failures.push_back({f.check + ": " + f.input, f.residual});
        if (quadratic_to_json(q) == quadratic_to_json(symmetric_data(q.dimV))) {
            long b = 1;
            for (int n = 0; n <= max_arity; ++n) {
                ++r.checked;
                if (static_cast<long>(K.dual_piece(n).size()) != b)
                    r.failures.push_back({"dual piece " + std::to_string(n),
                                          std::to_string(K.dual_piece(n).size()) + " != " + std::to_string(b)});
                b = b * (q.dimV - n) / (n + 1);
            }
        }
    });
}

CheckRecord check_koszul_ce(int dimV, int max_arity) {
    auto r0 = make("koszul-ce-isomorphism", "abelian" + std::to_string(dimV));
    r0.params["max_arity"] = max_arity;
    return timed(r0, [&](CheckRecord& r) {
        auto rep = ce_isomorphism_check(dimV, max_arity, 2);
        r.checked = rep.checked;
        for (auto& f : rep.failures) r.failures.push_back({f.check + ": " + f.input, f.residual});
    });
}

// ---------------------------------------------------------------- Duflo and star

CheckRecord check_duflo_series(int N) {
    auto r0 = make("duflo-series", "");
    r0.params["order"] = N;
    return timed(r0, [&](CheckRecord& r) {
        auto c = duflo_log_coeffs(N);
        ojson cs = ojson::array();
        for (int k = 1; k <= N; ++k) cs.push_back(to_string(c[k]));
        r.data["c"] = cs;
        // exp(2 sum c_k t^k) = (1 - e^{-t}) / t
        Series twice = c;
        for (auto& q : twice) q *= 2;
        auto e = series_exp(twice);
        Q f = 1;
        for (int n = 0; n <= N; ++n) {
            f *= n + 1;
            Q want = Q(n & 1 ? -1 : 1) / f;
            ++r.checked;
            if (e[n] != want) r.failures.push_back({"t^" + std::to_string(n), to_string(e[n] - want)});
        }
    });
}

CheckRecord check_duflo_operator(const LieAlgebra& g, Variant v, int order) {
    auto r0 = make("duflo-operator", g.name(), variant_name(v));
    r0.params["order"] = order;
    return timed(r0, [&](CheckRecord& r) {
        auto J = duflo_operator(g, v, order);
        std::vector<std::string> partials;
        for (auto& n : g.basis()) partials.push_back("d" + n);
        r.data["sqrtJ"] = render(J, partials);
        auto Ji = duflo_operator(g, v, order, -1);
        for (auto& a : polys(g.dim(), order))
            expect_zero(r, apply_operator(Ji, apply_operator(J, a)) - a, render(a, g), g);
    });
}

CheckRecord check_star(const LieAlgebra& g, Variant v, int maxdeg) {
    auto r0 = make("star-product", g.name(), variant_name(v));
    r0.params["max_degree"] = maxdeg;
    return timed(r0, [&](CheckRecord& r) {
        StarAlgebra S(g, v);
        auto ps = polys(g.dim(), maxdeg);
        for (auto& a : ps)
            for (auto& b : ps) {
                auto ab = S.star(a, b);
                ++r.checked;
                if (S.chi(ab) != S.chi(a) * S.chi(b))
                    r.failures.push_back({"chi " + render(a, g) + " , " + render(b, g),
                                          to_string(S.chi(ab) - S.chi(a) * S.chi(b))});
                for (auto& c : ps)
                    expect_zero(r, S.star(ab, c) - S.star(a, S.star(b, c)),
                                "assoc " + render(a, g) + " , " + render(b, g) + " , " + render(c, g), g);
            }
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j) {
                Sparse xi(xw({i})), xj(xw({j})), br;
                for (auto& t : g.bracket(i, j)) br.add(xw({t.k}), t.c);
                expect_zero(r, S.star(xi, xj) - S.star(xj, xi) - br, "commutator " + g.basis()[i] + " , " + g.basis()[j], g);
            }
        for (auto& a : polys(g.dim(), maxdeg + 1)) expect_zero(r, S.iso_inverse(S.iso(a)) - a, "iso " + render(a, g), g);
    });
}

CheckRecord check_c1_lemma(const LieAlgebra& g, Variant v, int maxdeg) {
    auto r0 = make("trace-derivation", g.name(), variant_name(v));
    r0.params["max_degree"] = maxdeg;
    return timed(r0, [&](CheckRecord& r) {
        StarAlgebra S(g, v);
        auto ps = polys(g.dim(), maxdeg);
        for (auto& a : ps)
            for (auto& b : ps) expect_zero(r, S.c1_derivation_residual(a, b), render(a, g) + " , " + render(b, g), g);
    });
}

CheckRecord check_variant_conjugation(const LieAlgebra& g, int maxdeg) {
    auto r0 = make("variant-conjugation", g.name());
    r0.params["max_degree"] = maxdeg;
    return timed(r0, [&](CheckRecord& r) {
        StarAlgebra Act(g, Variant::Actual), Mod(g, Variant::Modified);
        auto ps = polys(g.dim(), maxdeg);
        for (auto& a : ps)
            for (auto& b : ps) {
                auto lhs = Act.star(a, b);
                auto rhs = Act.exp_c1(Mod.star(Act.exp_c1(a, Q(1, 4)), Act.exp_c1(b, Q(1, 4))), Q(-1, 4));
                expect_zero(r, lhs - rhs, render(a, g) + " , " + render(b, g), g);
            }
    });
}

// ---------------------------------------------------------------- bar complex

CheckRecord check_bar_square(const Brane& br, int maxq, int maxdeg) {
    const auto& g = br.algebra();
    auto r0 = make("bar-d-squared", g.name(), variant_of(br));
    r0.params["max_q"] = maxq;
    r0.params["max_degree"] = maxdeg;
    return timed(r0, [&](CheckRecord& r) {
        auto ws = monomials(g.dim(), maxdeg);
        std::vector<Key> layer{Key{}};
        for (int q = 0; q <= maxq; ++q) {
            for (auto& a : ws)
                for (auto& tail : layer) {
                    Key k{a};
                    k.insert(k.end(), tail.begin(), tail.end());
                    k.push_back(Word{});
                    Vec dd;
                    for (auto& [k2, c] : br.bar_d({}, k, {})) dd.add(br.bar_d({}, k2, {}), c);
                    expect_zero(r, dd, render_key(k, g), g);
                }
            std::vector<Key> next;
            for (auto& t : layer)
                for (auto& w : ws) {
                    auto u = t;
                    u.push_back(w);
                    next.push_back(u);
                }
            layer = std::move(next);
        }
    });
}

CheckRecord check_bar_tensor(const Brane& br, int maxq) {
    const auto& g = br.algebra();
    auto r0 = make("bar-vs-tensor-product", g.name(), variant_of(br));
    r0.params["max_q"] = maxq;
    return timed(r0, [&](CheckRecord& r) {
        auto T = br.bar_generic();
        auto lin = monomials(g.dim(), 1, 1);
        std::vector<Key> layer{Key{}};
        for (int q = 0; q <= maxq; ++q) {
            for (auto& a : monomials(g.dim(), 2))
                for (auto& tail : layer) {
                    Key k{a};
                    k.insert(k.end(), tail.begin(), tail.end());
                    k.push_back(Word{});
                    std::string in = render_key(k, g);
                    expect_zero(r, T.d({}, k, {}) - br.bar_d({}, k, {}), "d00 " + in, g);
                    for (auto& x : lin) expect_zero(r, T.d({x}, k, {}) - br.bar_d({x}, k, {}), "d10 " + in, g);
                    for (auto& b : dth_words(g.dim()))
                        expect_zero(r, T.d({}, k, {b}) - br.bar_d({}, k, {b}), "d01 " + in + " | " + word_text(b, g), g);
                }
            std::vector<Key> next;
            for (auto& t : layer)
                for (auto& w : lin) {
                    auto u = t;
                    u.push_back(w);
                    next.push_back(u);
                }
            layer = std::move(next);
        }
    });
}

CheckRecord check_phi_chain(const Brane& br, int N) {
    const auto& g = br.algebra();
    auto r0 = make("phi-chain-map", g.name(), variant_of(br));
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        for (auto& w : ce_basis(g.dim(), N)) {
            Vec lhs;
            for (auto& [k, c] : br.phi(Sparse(w))) lhs.add(br.bar_d({}, k, {}), c);
            expect_zero(r, lhs - br.phi(br.pullback_d(Sparse(w))), word_text(w, g), g);
        }
    });
}

CheckRecord check_phi_left(const Brane& br, int N) {
    const auto& g = br.algebra();
    auto r0 = make("phi-left-action", g.name(), variant_of(br));
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        for (auto& w : ce_basis(g.dim(), N))
            for (auto& a : monomials(g.dim(), 1)) {
                Vec lhs;
                for (auto& [k, c] : br.phi(Sparse(w))) lhs.add(br.bar_d({a}, k, {}), c);
                expect_zero(r, lhs - br.phi(br.left(Sparse(a), Sparse(w))), word_text(a, g) + " | " + word_text(w, g), g);
            }
    });
}

CheckRecord check_mu_phi(const Brane& br, int N) {
    const auto& g = br.algebra();
    auto r0 = make("mu-phi-augmentation", g.name(), variant_of(br));
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        for (auto& w : ce_basis(g.dim(), N)) {
            Q want = w.th.empty() ? br.star().chi(Sparse(w)) : Q(0);
            Q got = br.mu_phi_composite(Sparse(w));
            ++r.checked;
            if (got != want) r.failures.push_back({word_text(w, g), to_string(got - want)});
        }
    });
}

CheckRecord check_literal_differential(const Brane& br, int N) {
    const auto& g = br.algebra();
    auto r0 = make("literal-differential", g.name(), variant_of(br));
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        ojson diffs = ojson::array();
        long agree = 0;
        for (auto& w : ce_basis(g.dim(), N)) {
            ++r.checked;
            Sparse diff = br.literal_d(Sparse(w)) - br.pullback_d(Sparse(w));
            if (diff.zero()) ++agree;
            else if (diffs.size() < 8) diffs.push_back({{"input", word_text(w, g)}, {"literal_minus_pullback", render(diff, g)}});
        }
        r.data["agrees"] = agree == r.checked;
        r.data["agreeing_inputs"] = agree;
        r.data["discrepancies"] = diffs;
    });
}

// ---------------------------------------------------------------- bimodule identities

CheckRecord check_calibration(int pmax, std::vector<int>& weights) {
    auto r0 = make("calibrate-weights", "abelian" + std::to_string(pmax));
    r0.params["pmax"] = pmax;
    return timed(r0, [&](CheckRecord& r) {
        ++r.checked;
        try {
            weights = calibrate_wp(pmax);
            r.data["w"] = weights;
        } catch (const CalibrationError& e) {
            r.failures.push_back({"probe", e.what()});
        }
    });
}

CheckRecord check_ainf1(const Brane& br, int N) {
    const auto& g = br.algebra();
    auto r0 = make("ainf-right-action", g.name(), variant_of(br));
    r0.params["max_filtration"] = N;
    r0.params["w"] = br.weights();
    return timed(r0, [&](CheckRecord& r) {
        for (auto& eta : ce_basis(g.dim(), N))
            for (auto& b : dth_words(g.dim()))
                expect_zero(r, br.a_inf_1_residual(eta, b), word_text(eta, g) + " | " + word_text(b, g), g);
    });
}

CheckRecord check_ainf2(const Brane& br, int pmax, int N) {
    const auto& g = br.algebra();
    auto r0 = make("ainf-higher-right-action", g.name(), variant_of(br));
    r0.params["pmax"] = pmax;
    r0.params["max_filtration"] = N;
    return timed(r0, [&](CheckRecord& r) {
        auto bs = dth_words(g.dim());
        for (int p = 2; p <= pmax; ++p) {
            std::vector<Args> tuples{Args{}};
            for (int i = 0; i < p; ++i) {
                std::vector<Args> next;
                for (auto& t : tuples)
                    for (auto& b : bs) {
                        auto u = t;
                        u.push_back(b);
                        next.push_back(u);
                    }
                tuples = std::move(next);
            }
            for (auto& eta : ce_basis(g.dim(), N))
                for (auto& t : tuples) {
                    std::string in = word_text(eta, g);
                    for (auto& b : t) in += " | " + word_text(b, g);
                    expect_zero(r, br.a_inf_2_residual(eta, t), in, g);
                }
        }
    });
}

CheckRecord check_degree_certificates(int nmax, int pmax) {
    auto r0 = make("ainf-degree-count", "");
    r0.params["nmax"] = nmax;
    r0.params["pmax"] = pmax;
    return timed(r0, [&](CheckRecord& r) {
        ojson rows = ojson::array();
        for (int p = 2; p <= pmax; ++p)
            for (int n = 1; n <= nmax; ++n) {
                auto c = a_inf_2_certificate(n, p);
                rows.push_back({{"n", n}, {"p", p}, {"degree", c.degree}, {"infeasible", c.infeasible}});
                ++r.checked;
                if (!c.infeasible) r.failures.push_back({"n=" + std::to_string(n) + " p=" + std::to_string(p),
                                                         "degree " + std::to_string(c.degree) + " >= 0"});
            }
        r.data["rows"] = rows;
    });
}

CheckRecord check_graph_filter(int n, int k, int l) {
    auto r0 = make("graph-filter", "");
    r0.params["type"] = {n, k, l};
    return timed(r0, [&](CheckRecord& r) {
        auto gs = graph_filter_all(n, k, l);
        ojson graphs = ojson::array();
        std::map<std::vector<int>, int> wheels;
        for (auto& G : gs) {
            graphs.push_back(render_graph(G));
            if (k == 1 && l == 0) {
                ++r.checked;
                auto c = wheel_cycles(G);
                if (!c) r.failures.push_back({render_graph(G), "not a union of wheels"});
                else ++wheels[*c];
            }
        }
        if (n == 0 && k == 0 && l >= 2) {
            ++r.checked;
            if (!gs.empty()) r.failures.push_back({"type (0,0," + std::to_string(l) + ")", "survivors present"});
        }
        r.data["count"] = gs.size();
        r.data["graphs"] = graphs;
        if (k == 1 && l == 0) {
            ojson w = ojson::array();
            for (auto& [cyc, cnt] : wheels) w.push_back({{"cycles", cyc}, {"count", cnt}});
            r.data["wheels"] = w;
        }
    });
}

// ---------------------------------------------------------------- reports

ojson record_json(const CheckRecord& r, bool timestamps) {
    ojson j;
    j["id"] = r.id;
    j["algebra"] = r.algebra;
    j["variant"] = r.variant;
    j["params"] = r.params;
    j["checked"] = r.checked;
    j["pass"] = r.pass();
    ojson f = ojson::array();
    for (auto& x : r.failures) f.push_back({{"input", x.input}, {"residual", x.residual}});
    j["failures"] = f;
    j["data"] = r.data;
    if (timestamps) j["seconds"] = r.seconds;
    return j;
}

ojson report_json(const std::vector<CheckRecord>& rs, const std::string& descriptor, bool timestamps) {
    ojson j;
    j["tool"] = kToolVersion;
    j["descriptor"] = descriptor;
    if (timestamps) {
        std::time_t t = std::time(nullptr);
        std::ostringstream os;
        os << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
        j["generated"] = os.str();
    }
    long passed = 0;
    for (auto& r : rs) passed += r.pass();
    j["summary"] = {{"checks", rs.size()}, {"passed", passed}, {"failed", static_cast<long>(rs.size()) - passed}};
    ojson checks = ojson::array();
    for (auto& r : rs) checks.push_back(record_json(r, timestamps));
    j["checks"] = checks;
    return j;
}

std::string report_markdown(const std::vector<CheckRecord>& rs, const std::string& descriptor, bool timestamps) {
    std::ostringstream os;
    long passed = 0;
    for (auto& r : rs) passed += r.pass();
    os << "# " << kToolVersion << " report\n\n";
    os << "Descriptor: " << descriptor << "\n\n";
    os << passed << " of " << rs.size() << " checks pass.\n\n";
    os << "| check | algebra | variant | inputs | result |" << (timestamps ? " seconds |" : "") << "\n";
    os << "|---|---|---|---|---|" << (timestamps ? "---|" : "") << "\n";
    for (auto& r : rs) {
        os << "| " << r.id << " | " << (r.algebra.empty() ? "-" : r.algebra) << " | "
           << (r.variant.empty() ? "-" : r.variant) << " | " << r.checked << " | " << (r.pass() ? "pass" : "FAIL")
           << " |";
        if (timestamps) os << " " << std::fixed << std::setprecision(3) << r.seconds << " |";
        os << "\n";
    }
    for (auto& r : rs) {
        if (r.pass()) continue;
        os << "\n## " << r.id << " " << r.algebra << " " << r.variant << "\n\n";
        for (auto& f : r.failures) os << "- `" << f.input << "` -> `" << f.residual << "`\n";
    }
    return os.str();
}

std::string summary_lines(const CheckRecord& r) {
    std::ostringstream os;
    os << (r.pass() ? "PASS " : "FAIL ") << r.id;
    if (!r.algebra.empty()) os << " " << r.algebra;
    if (!r.variant.empty()) os << " " << r.variant;
    os << " checked=" << r.checked << "\n";
    std::size_t shown = 0;
    for (auto& f : r.failures) {
        if (shown++ == 20) {
            os << "  ... " << r.failures.size() - 20 << " more\n";
            break;
        }
        os << "  " << f.input << " -> " << f.residual << "\n";
    }
    return os.str();
}

std::vector<CheckRecord> full_report() {
    std::vector<CheckRecord> out;
    std::vector<int> w;
    out.push_back(check_calibration(3, w));
    out.push_back(check_duflo_series(8));
    for (int d : {2, 3}) {
        out.push_back(check_koszul(symmetric_data(d), 3));
        out.push_back(check_koszul_ce(d, d));
    }
    for (auto& name : catalog_names()) {
        auto g = catalog(name);
        out.push_back(check_jacobi(g));
        out.push_back(check_cochain_square(g));
        out.push_back(check_ce_square(g, 4));
        out.push_back(check_leibniz(g, 3));
        out.push_back(check_dk_hat(g, 4));
        out.push_back(check_cohomology(g, 3));
        out.push_back(check_variant_conjugation(g, 2));
        for (auto v : {Variant::Actual, Variant::Modified}) {
            out.push_back(check_duflo_operator(g, v, 3));
            out.push_back(check_star(g, v, 2));
            out.push_back(check_c1_lemma(g, v, 2));
            Brane br(g, v, w);
            out.push_back(check_bar_square(br, 2, 1));
            out.push_back(check_phi_chain(br, 3));
            out.push_back(check_phi_left(br, 2));
            out.push_back(check_mu_phi(br, 3));
            out.push_back(check_literal_differential(br, 3));
            out.push_back(check_ainf1(br, 3));
            out.push_back(check_ainf2(br, 2, 2));
        }
    }
    out.push_back(check_degree_certificates(4, 3));
    for (int l = 2; l <= 4; ++l) out.push_back(check_graph_filter(0, 0, l));
    for (int n = 1; n <= 3; ++n) out.push_back(check_graph_filter(n, 1, 0));
    for (int p = 1; p <= 3; ++p) out.push_back(check_graph_filter(0, p, 1));
    return out;
}

}  // namespace cebar
