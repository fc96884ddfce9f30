#include "cebar/brane.hpp"

#include "cebar/ce.hpp"
#include "cebar/expr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cebar {

namespace {

Q sign_of(long e) { return (e & 1) ? Q(-1) : Q(1); }

const Key& one_key() {
    static const Key k{Word{}};
    return k;
}

int parity(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    return inv & 1;
}

Word x_only(const Word& w) { return xw(w.x); }

}  // namespace

// ---------------------------------------------------------------- graphs

std::vector<AdmissibleGraph> graph_filter(int n, int k, int l, const std::vector<int>& adeg,
                                          const std::vector<int>& bdeg) {
    if (n < 0 || k < 0 || l < 0 || static_cast<int>(adeg.size()) != k || static_cast<int>(bdeg.size()) != l)
        throw ContractViolation("graph_filter: degree lists do not match (k, l)");
    std::vector<AdmissibleGraph> out;
    const int E = 2 * n + k + l - 1;
    if (E < 0) return out;
    int outdeg = 2 * n;
    for (int d : bdeg) outdeg += d;
    if (outdeg != E) return out;
    for (int d : bdeg)
        if (d < 1) return out;  // a B vertex with nothing attached
    for (int d : adeg)
        if (d < 1) return out;
    const int T = n + k;
    std::vector<std::pair<int, int>> sources;  // (vertex, out-degree)
    for (int i = 0; i < n; ++i) sources.push_back({i, 2});
    for (int j = 0; j < l; ++j) sources.push_back({n + k + j, bdeg[j]});
    for (auto& s : sources)
        if (s.second > T) return out;

    std::vector<int> in(T, 0);
    std::vector<std::pair<int, int>> edges;
    auto cap = [&](int t) { return t < n ? 1 : adeg[t - n]; };
    std::function<void(std::size_t)> place = [&](std::size_t s) {
        if (s == sources.size()) {
            for (int a = 0; a < k; ++a)
                if (in[n + a] != adeg[a]) return;
            out.push_back({n, k, l, adeg, bdeg, edges});
            return;
        }
        auto [v, d] = sources[s];
        std::function<void(int, int)> choose = [&](int from, int left) {
            if (left == 0) {
                place(s + 1);
                return;
            }
            for (int t = from; t < T; ++t) {
                if (in[t] >= cap(t)) continue;
                ++in[t];
                edges.push_back({v, t});
                choose(t + 1, left - 1);
                edges.pop_back();
                --in[t];
            }
        };
        choose(0, d);
    };
    place(0);
    return out;
}

std::vector<AdmissibleGraph> graph_filter_all(int n, int k, int l) {
    std::vector<AdmissibleGraph> out;
    const int E = 2 * n + k + l - 1;
    if (E < 0) return out;
    const int bsum = E - 2 * n;
    std::vector<std::vector<int>> bprofiles;
    std::vector<int> cur;
    std::function<void(int, int)> bgen = [&](int j, int left) {
        if (j == l) {
            if (left == 0) bprofiles.push_back(cur);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            cur.push_back(d);
            bgen(j + 1, left - d);
            cur.pop_back();
        }
    };
    bgen(0, bsum);
    std::vector<std::vector<int>> aprofiles;
    std::function<void(int, int)> agen = [&](int j, int sum) {
        if (j == k) {
            if (sum >= E - n && sum <= E) aprofiles.push_back(cur);
            return;
        }
        for (int d = 0; d + sum <= E; ++d) {
            cur.push_back(d);
            agen(j + 1, sum + d);
            cur.pop_back();
        }
    };
    agen(0, 0);
    for (auto& a : aprofiles)
        for (auto& b : bprofiles)
            for (auto& G : graph_filter(n, k, l, a, b)) out.push_back(std::move(G));
    return out;
}

std::optional<std::vector<int>> wheel_cycles(const AdmissibleGraph& G) {
    if (G.k != 1 || G.l != 0) return std::nullopt;
    const int n = G.n;
    std::vector<int> next(n, -1), to_a(n, 0);
    for (auto [s, t] : G.edges) {
        if (s >= n) return std::nullopt;
        if (t == n) ++to_a[s];
        else if (next[s] == -1) next[s] = t;
        else return std::nullopt;
    }
    std::vector<int> seen(n, 0), hit(n, 0);
    for (int i = 0; i < n; ++i) {
        if (to_a[i] != 1 || next[i] < 0) return std::nullopt;
        if (hit[next[i]]++) return std::nullopt;
    }
    std::vector<int> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = next[j]) seen[j] = 1, ++len;
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::string render_graph(const AdmissibleGraph& G) {
    auto name = [&](int v) {
        if (v < G.n) return "F" + std::to_string(v + 1);
        if (v < G.n + G.k) return "A" + std::to_string(v - G.n + 1);
        return "B" + std::to_string(v - G.n - G.k + 1);
    };
    auto list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    std::string out = "adeg=" + list(G.adeg) + " bdeg=" + list(G.bdeg) + ":";
    for (auto [s, t] : G.edges) out += " " + name(s) + "->" + name(t);
    return out;
}

DegreeCertificate a_inf_2_certificate(int n, int p) {
    int deg = -n - p + 1;
    return {n, p, deg, deg < 0};
}

// ---------------------------------------------------------------- brane

TaylorAlgebra cochain_algebra(const LieAlgebra& g) {
    return dg_algebra([](const Word& w) { return static_cast<int>(w.dth.size()); },
                      [g](const Word& w) { return ce_cochain_d(g, Sparse(w)); },
                      [](const Word& a, const Word& b) { return wedge(Sparse(a), Sparse(b)); });
}

Q wedge_pairing(const std::vector<int>& idx, const Word& b) {
    if (idx.size() != b.dth.size() || !b.x.empty() || !b.th.empty()) return 0;
    std::vector<int> s = idx;
    int sg = sort_odd(s);
    if (sg == 0) return 0;
    Q fact = 1;
    for (std::size_t i = 2; i <= s.size(); ++i) fact *= static_cast<long>(i);
    return contract(Sparse(thw(s)), b).coeff(Word{}) * sg / fact;
}

Brane::Brane(LieAlgebra g, Variant v, std::vector<int> weights) : S_(std::move(g), v), w_(std::move(weights)) {
    A_ = dg_algebra([](const Word&) { return 0; }, [](const Word&) { return Sparse(); },
                    [this](const Word& a, const Word& b) { return S_.star(Sparse(a), Sparse(b)); });
    B_ = cochain_algebra(S_.algebra());
    K_.degree = [](const Key&) { return 0; };
    K_.d = [this](const Args& a, const Key&, const Args& b) { return k_component(a, b); };
    AB_ = dg_bimodule(
        A_, [](const Key& k) { return -static_cast<int>(k.at(0).th.size()); },
        [this](const Key& k) { return lift(pullback_d(Sparse(k.at(0)))); },
        [this](const Word& a, const Key& k) { return lift(left(Sparse(a), Sparse(k.at(0)))); },
        [](const Key& k, const Word& b) { return lift(m_R(Sparse(k.at(0)), Sparse(b))); });
    bar_.degree = [](const Key& k) { return 2 - static_cast<int>(k.size()); };
    bar_.d = [this](const Args& a, const Key& k, const Args& b) { return bar_d(a, k, b); };
}

TaylorBimodule Brane::bar_generic() const { return tensor_bimodule(algebra_as_bimodule(A_), A_, K_); }

Vec Brane::k_component(const Args& a, const Args& b) const {
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    Vec out;
    if (n == 0) {
        if (m == 1) out.add(one_key(), S_.chi(Sparse(a[0])));
        return out;  // d^{k,0} = 0 for k >= 2
    }
    if (m == 0) {
        if (n == 1 && b[0].empty()) out.add(one_key(), 1);
        return out;  // no admissible graph of type (0,0,l), l >= 2
    }
    for (auto& w : a)
        if (w.x.empty()) return out;  // strict unitality
    for (auto& w : b)
        if (w.empty()) return out;
    for (auto& w : a)
        if (w.x.size() > 1) throw ComponentUnavailable(m, n, "nonlinear A-argument");
    std::vector<int> bdeg;
    for (auto& w : b) bdeg.push_back(static_cast<int>(w.dth.size()));
    if (n >= 2) {
        if (graph_filter(0, m, n, std::vector<int>(m, 1), bdeg).empty()) return out;
        throw ComponentUnavailable(m, n, "graph weights not available");
    }
    if (bdeg[0] != m) return out;
    if (m > static_cast<int>(w_.size())) throw ComponentUnavailable(m, n, "weight w_" + std::to_string(m) + " not set");
    std::vector<int> idx;
    for (auto& w : a) idx.push_back(w.x[0]);
    std::vector<int> deg(m + 1, 0);
    deg.push_back(m);
    out.add(one_key(), md_sign(deg) * w_[m - 1] * wedge_pairing(idx, b[0]));
    return out;
}

Vec Brane::bar_d(const Args& a, const Key& key, const Args& b) const {
    if (key.size() < 2 || !key.back().empty()) throw ContractViolation("bar_d: malformed bar element");
    const std::size_t q = key.size() - 2;
    Vec out;
    if (a.empty() && b.empty()) {
        if (q == 0) return out;
        for (auto& [w, c] : S_.star(Sparse(key[0]), Sparse(key[1]))) {
            Key k{w};
            k.insert(k.end(), key.begin() + 2, key.end());
            out.add(k, c);
        }
        for (std::size_t i = 1; i < q; ++i)
            for (auto& [w, c] : S_.star(Sparse(key[i]), Sparse(key[i + 1]))) {
                Key k(key.begin(), key.begin() + i);
                k.push_back(w);
                k.insert(k.end(), key.begin() + i + 2, key.end());
                out.add(k, sign_of(i) * c);
            }
        Key k(key.begin(), key.end() - 2);
        k.push_back(Word{});
        out.add(k, sign_of(q) * S_.chi(Sparse(key[q])));
        return out;
    }
    if (a.size() == 1 && b.empty()) {
        for (auto& [w, c] : S_.star(Sparse(a[0]), Sparse(key[0]))) {
            Key k = key;
            k[0] = w;
            out.add(k, c);
        }
        return out;
    }
    if (a.empty()) {
        for (std::size_t l = 0; l <= q; ++l) {
            Args rest(key.begin() + 1 + l, key.end() - 1);
            Q c = k_component(rest, b).coeff(one_key());
            if (c == 0) continue;
            Key k(key.begin(), key.begin() + 1 + l);
            k.push_back(Word{});
            out.add(k, sign_of(q) * c);
        }
    }
    return out;
}

Vec Brane::phi(const Sparse& e) const {
    Vec out;
    for (auto& [w, c] : e) {
        std::vector<int> perm(w.th.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Key k{x_only(w)};
            for (int p : perm) k.push_back(xw({w.th[p]}));
            k.push_back(Word{});
            out.add(k, parity(perm) ? -c : c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

BimoduleMorphism Brane::phi_morphism() const {
    return strict_morphism([this](const Key& k) { return phi(Sparse(k.at(0))); });
}

Sparse Brane::iso_inverse_word(const std::vector<int>& x) const {
    auto it = inv_cache_.find(x);
    if (it != inv_cache_.end()) return it->second;
    return inv_cache_[x] = S_.iso_inverse(Sparse(xw(x)));
}

Sparse Brane::pullback_d(const Sparse& e) const {
    Sparse u;
    for (auto& [w, c] : e)
        for (auto& [v, cv] : S_.iso(Sparse(xw(w.x)))) u.add(Word{v.x, w.th, {}}, c * cv);
    Sparse out;
    for (auto& [w, c] : d_CE(S_.uea(), u))
        for (auto& [v, cv] : iso_inverse_word(w.x)) out.add(Word{v.x, w.th, {}}, c * cv);
    return out;
}

Sparse Brane::literal_d(const Sparse& e) const {
    const auto& g = algebra();
    Sparse out;
    for (auto& [w, c] : e) {
        const auto& I = w.th;
        const std::size_t q = I.size();
        Sparse a(x_only(w));
        for (std::size_t k = 0; k < q; ++k) {
            std::vector<int> rest = I;
            rest.erase(rest.begin() + k);
            for (auto& [v, cv] : S_.star(a, Sparse(xw({I[k]})))) out.add(Word{v.x, rest, {}}, sign_of(k) * c * cv);
        }
        for (std::size_t k = 0; k < q; ++k)
            for (std::size_t l = k + 1; l < q; ++l)
                for (auto& t : g.bracket(I[k], I[l])) {
                    std::vector<int> th{t.k};
                    for (std::size_t r = 0; r < q; ++r)
                        if (r != k && r != l) th.push_back(I[r]);
                    int sg = sort_odd(th);
                    if (sg == 0) continue;
                    out.add(Word{w.x, th, {}}, sign_of(k + l) * sg * c * t.c);
                }
    }
    return out;
}

Sparse Brane::left(const Sparse& a1, const Sparse& e) const {
    Sparse out;
    for (auto& [w, c] : e)
        for (auto& [v, cv] : S_.star(a1, Sparse(x_only(w)))) out.add(Word{v.x, w.th, {}}, c * cv);
    return out;
}

Vec Brane::a_inf_1_residual(const Word& eta, const Word& b) const {
    Vec lhs;
    for (auto& [k, c] : phi(Sparse(eta))) lhs.add(bar_d({}, k, {b}), c);
    Sparse r;
    for (auto& [k, c] : AB_.d({}, Key{eta}, {b})) r.add(k.at(0), c);
    return lhs - phi(r);
}

Vec Brane::a_inf_2_residual(const Word& eta, const Args& bs) const {
    Vec lhs;
    for (auto& [k, c] : phi(Sparse(eta))) lhs.add(bar_d({}, k, bs), c);
    Sparse r;
    for (auto& [k, c] : AB_.d({}, Key{eta}, bs)) r.add(k.at(0), c);
    return lhs - phi(r);
}

Q Brane::mu_phi_composite(const Sparse& e) const {
    auto mu = mu_morphism(A_, K_);
    Q out = 0;
    for (auto& [k, c] : phi(e)) out += c * mu.phi({}, k, {}).coeff(one_key());
    return out;
}

std::vector<int> calibrate_wp(int pmax) {
    std::vector<std::string> names;
    for (int i = 1; i <= pmax; ++i) names.push_back("x" + std::to_string(i));
    LieAlgebra ab("abelian" + std::to_string(pmax), names);
    std::vector<int> w;
    for (int p = 1; p <= pmax; ++p) {
        std::vector<int> idx(p);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<int> good;
        for (int s : {1, -1}) {
            if (p == 1 && s == -1) continue;  // w_1 = 1 is fixed by m^{1,1} = <b, a>
            auto trial = w;
            trial.push_back(s);
            Brane br(ab, Variant::Actual, trial);
            if (br.a_inf_1_residual(thw(idx), dthw(idx)).zero()) good.push_back(s);
        }
        if (good.size() != 1)
            throw CalibrationError("no unique sign for w_" + std::to_string(p) + " (" +
                                   std::to_string(good.size()) + " candidates)");
        w.push_back(good[0]);
    }
    return w;
}

std::string render_key(const Key& k, const LieAlgebra& g) {
    auto word = [&](const Word& w) {
        std::string s = render_word(w, g.basis());
        return s.empty() ? std::string("1") : s;
    };
    std::string out = word(k.front()) + " (x) (";
    for (std::size_t i = 1; i + 1 < k.size(); ++i) out += (i > 1 ? "|" : "") + word(k[i]);
    return out + ") (x) " + word(k.back());
}

std::string render_bar(const Vec& v, const LieAlgebra& g) {
    if (v.zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, c] : v) {
        Q a = abs(c);
        std::string body = (a == 1 ? "" : to_string(a) + "*") + "[" + render_key(k, g) + "]";
        if (first) out += (c < 0 ? "-" : "") + body;
        else out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace cebar
