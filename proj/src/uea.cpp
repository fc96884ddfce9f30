#include "cebar/uea.hpp"

#include <algorithm>

namespace cebar {

std::vector<Letter> letters_of(const Word& w) {
    std::vector<Letter> out;
    for (int i : w.x) out.push_back({false, i});
    for (int i : w.th) out.push_back({true, i});
    return out;
}

Sparse Uea::mul_th(const Word& w, int k) const {
    Sparse out;
    auto it = std::lower_bound(w.th.begin(), w.th.end(), k);
    if (it != w.th.end() && *it == k) return out;
    Word v = w;
    auto pos = it - w.th.begin();
    v.th.insert(v.th.begin() + pos, k);
    std::size_t after = w.th.size() - pos;
    out.add(v, (after & 1) ? -1 : 1);
    return out;
}

Sparse Uea::mul_x(const Word& w, int j) const {
    auto key = std::make_pair(w, j);
    if (auto it = mulx_cache_.find(key); it != mulx_cache_.end()) return it->second;
    Sparse out;
    if (!w.th.empty()) {
        // (P th_l) x_j = (P x_j) th_l - f_{jl}^k P th_k
        Word p = w;
        int l = p.th.back();
        p.th.pop_back();
        for (auto& [u, c] : mul_x(p, j)) out.add(mul_th(u, l), c);
        for (auto& t : g_.bracket(j, l)) out.add(mul_th(p, t.k), -t.c);
    } else if (w.x.empty() || w.x.back() <= j) {
        Word v = w;
        v.x.push_back(j);
        out.add(v, 1);
    } else {
        // (P x_k) x_j = (P x_j) x_k - f_{jk}^l P x_l, k > j
        Word p = w;
        int k = p.x.back();
        p.x.pop_back();
        for (auto& [u, c] : mul_x(p, j)) out.add(mul_x(u, k), c);
        for (auto& t : g_.bracket(j, k)) out.add(mul_x(p, t.k), -t.c);
    }
    mulx_cache_.emplace(key, out);
    return out;
}

Sparse Uea::mul_letter(const Sparse& u, Letter l) const {
    Sparse out;
    for (auto& [w, c] : u) out.add(l.odd ? mul_th(w, l.idx) : mul_x(w, l.idx), c);
    return out;
}

Sparse Uea::normal_form(const std::vector<Letter>& word) const {
    Sparse cur(Word{});
    for (auto& l : word) cur = mul_letter(cur, l);
    return cur;
}

Sparse Uea::normal_form(const Sparse& raw) const {
    Sparse out;
    for (auto& [w, c] : raw) out.add(normal_form(letters_of(w)), c);
    return out;
}

Sparse Uea::product(const Sparse& u, const Sparse& v) const {
    Sparse out;
    for (auto& [w, c] : v) {
        Sparse cur = u;
        for (auto& l : letters_of(w)) cur = mul_letter(cur, l);
        out.add(cur, c);
    }
    return out;
}

Q Uea::epsilon(const Sparse& u) const { return u.coeff(Word{}); }

const Sparse& Uea::sym_monomial(const std::vector<int>& m) const {
    if (auto it = sym_cache_.find(m); it != sym_cache_.end()) return it->second;
    Sparse out;
    if (m.empty()) {
        out.add(Word{}, 1);
    } else {
        // average over which factor comes first
        Q w(1, static_cast<long>(m.size()));
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r > 0 && m[r] == m[r - 1]) continue;
            auto rest = m;
            rest.erase(rest.begin() + r);
            long mult = std::count(m.begin(), m.end(), m[r]);
            Sparse first(xw({m[r]}));
            out.add(product(first, sym_monomial(rest)), w * mult);
        }
    }
    return sym_cache_.emplace(m, out).first->second;
}

Sparse Uea::symmetrize(const Sparse& a) const {
    Sparse out;
    for (auto& [w, c] : a) {
        Sparse s = sym_monomial(w.x);
        if (!w.th.empty()) {
            Sparse t;
            for (auto& [u, cu] : s) {
                Word v = u;
                v.th = w.th;
                t.add(v, cu);
            }
            s = t;
        }
        out.add(s, c);
    }
    return out;
}

Sparse Uea::symmetrize_inverse(const Sparse& u) const {
    Sparse rest = u, out;
    while (!rest.zero()) {
        std::size_t top = 0;
        for (auto& [w, c] : rest) top = std::max(top, w.x.size());
        Sparse lead;
        for (auto& [w, c] : rest)
            if (w.x.size() == top) lead.add(w, c);
        out += lead;
        rest -= symmetrize(lead);
    }
    return out;
}

Sparse Uea::dK_hat(const Sparse& e) const {
    Sparse out;
    for (auto& [w, c] : e) {
        for (std::size_t k = 0; k < w.th.size(); ++k) {
            std::vector<Letter> seq;
            for (int i : w.x) seq.push_back({false, i});
            for (std::size_t r = 0; r < w.th.size(); ++r) seq.push_back({r == k ? false : true, w.th[r]});
            out.add(normal_form(seq), (k & 1) ? -c : c);
        }
    }
    return out;
}

}  // namespace cebar
