#include "cebar/duflo.hpp"

#include <algorithm>

namespace cebar {

std::string variant_name(Variant v) { return v == Variant::Actual ? "actual" : "modified"; }

Variant parse_variant(const std::string& s) {
    if (s == "actual") return Variant::Actual;
    if (s == "modified") return Variant::Modified;
    throw std::invalid_argument("unknown variant '" + s + "' (expected actual or modified)");
}

Series series_mul(const Series& a, const Series& b) {
    Series c(a.size(), Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Series series_exp(const Series& a) {
    if (a.empty() || a[0] != 0) throw ContractViolation("series_exp: constant term must be 0");
    Series out(a.size(), Q(0)), p(a.size(), Q(0));
    out[0] = 1;
    p[0] = 1;
    for (std::size_t n = 1; n < a.size(); ++n) {
        p = series_mul(p, a);
        Q f = 1;
        for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += p[i] / f;
    }
    return out;
}

Series series_log(const Series& a) {
    if (a.empty() || a[0] != 1) throw ContractViolation("series_log: constant term must be 1");
    // log(1 + u) = sum (-1)^{n+1} u^n / n
    Series u = a, out(a.size(), Q(0)), p(a.size(), Q(0));
    u[0] = 0;
    p[0] = 1;
    for (std::size_t n = 1; n < a.size(); ++n) {
        p = series_mul(p, u);
        Q c(n & 1 ? 1 : -1, static_cast<long>(n));
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += c * p[i];
    }
    return out;
}

Series duflo_log_coeffs(int N) {
    if (N < 1) throw ContractViolation("duflo_log_coeffs: N must be at least 1");
    // (1 - e^{-t}) / t = sum_n (-t)^n / (n+1)!
    Series s(N + 1, Q(0));
    Q f = 1;
    for (int n = 0; n <= N; ++n) {
        f *= n + 1;
        s[n] = Q(n & 1 ? -1 : 1) / f;
    }
    Series l = series_log(s);
    for (auto& c : l) c /= 2;
    return l;
}

int max_degree(const Sparse& a) {
    int d = 0;
    for (auto& [w, c] : a) d = std::max(d, static_cast<int>(w.x.size()));
    return d;
}

namespace {

// d^beta applied to x^alpha, both as sorted index lists
void differentiate(const std::vector<int>& beta, const Word& w, const Q& c, Sparse& out) {
    Q coef = c;
    std::vector<int> rest = w.x;
    for (int i : beta) {
        long m = std::count(rest.begin(), rest.end(), i);
        if (m == 0) return;
        coef *= m;
        rest.erase(std::find(rest.begin(), rest.end(), i));
    }
    Word v = w;
    v.x = rest;
    out.add(v, coef);
}

Sparse truncate(const Sparse& a, int order) {
    Sparse out;
    for (auto& [w, c] : a)
        if (static_cast<int>(w.x.size()) <= order) out.add(w, c);
    return out;
}

}  // namespace

Sparse apply_operator(const Sparse& op, const Sparse& a) {
    Sparse out;
    for (auto& [o, co] : op)
        for (auto& [w, c] : a) differentiate(o.x, w, co * c, out);
    return out;
}

Sparse duflo_operator(const LieAlgebra& g, Variant v, int max_order, int sign) {
    Sparse one(Word{});
    if (max_order < 1) return one;
    auto c = duflo_log_coeffs(max_order);
    Sparse L;
    for (int k = 1; k <= max_order; ++k) {
        if (v == Variant::Modified && (k & 1)) continue;
        L.add(trace_power_poly(g, k), c[k] * sign);
    }
    Sparse out = one, p = one;
    Q f = 1;
    for (int n = 1; n <= max_order; ++n) {
        p = truncate(product_commutative(p, L), max_order);
        if (p.zero()) break;
        f *= n;
        out.add(p, 1 / f);
    }
    return out;
}

StarAlgebra::StarAlgebra(LieAlgebra g, Variant v) : U_(std::move(g)), v_(v) {}

const Sparse& StarAlgebra::op(int order, int sign) const {
    auto key = std::make_pair(order, sign);
    if (auto it = ops_.find(key); it != ops_.end()) return it->second;
    return ops_.emplace(key, duflo_operator(algebra(), v_, order, sign)).first->second;
}

Sparse StarAlgebra::sqrtJ(const Sparse& a, int sign) const { return apply_operator(op(max_degree(a), sign), a); }

Sparse StarAlgebra::iso(const Sparse& a) const { return U_.symmetrize(sqrtJ(a)); }

Sparse StarAlgebra::iso_inverse(const Sparse& u) const { return sqrtJ(U_.symmetrize_inverse(u), -1); }

const Sparse& StarAlgebra::star_words(const Word& a, const Word& b) const {
    auto key = std::make_pair(a, b);
    if (auto it = star_cache_.find(key); it != star_cache_.end()) return it->second;
    Sparse r = iso_inverse(U_.product(iso(Sparse(a)), iso(Sparse(b))));
    return star_cache_.emplace(key, std::move(r)).first->second;
}

Sparse StarAlgebra::star(const Sparse& a, const Sparse& b) const {
    Sparse out;
    for (auto& [wa, ca] : a)
        for (auto& [wb, cb] : b) out.add(star_words(wa, wb), ca * cb);
    return out;
}

Q StarAlgebra::chi(const Sparse& a) const { return sqrtJ(a).coeff(Word{}); }

Sparse StarAlgebra::c1_derivation(const Sparse& a) const {
    auto c1 = c1_functional(algebra());
    Sparse op;
    for (int i = 0; i < algebra().dim(); ++i) op.add(xw({i}), c1[i]);
    return apply_operator(op, a);
}

Sparse StarAlgebra::c1_derivation_residual(const Sparse& a, const Sparse& b) const {
    return c1_derivation(star(a, b)) - star(c1_derivation(a), b) - star(a, c1_derivation(b));
}

Sparse StarAlgebra::exp_c1(const Sparse& a, const Q& t) const {
    Sparse out = a, p = a;
    Q f = 1;
    for (int n = 1; n <= max_degree(a); ++n) {
        p = c1_derivation(p) * t;
        if (p.zero()) break;
        f *= n;
        out.add(p, 1 / f);
    }
    return out;
}

}  // namespace cebar
