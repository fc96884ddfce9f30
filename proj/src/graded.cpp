#include "cebar/graded.hpp"

#include <algorithm>

namespace cebar {

OddKind odd_kind(const Sparse& e) {
    bool th = false, dth = false, even = false;
    for (auto& [w, c] : e) {
        th |= !w.th.empty();
        dth |= !w.dth.empty();
        even |= !w.x.empty();
    }
    if (e.zero()) return OddKind::Zero;
    if (even || (th && dth)) return (th || dth) ? OddKind::Mixed : OddKind::Even;
    if (th) return OddKind::Theta;
    if (dth) return OddKind::DTheta;
    return OddKind::Zero;  // scalars only: compatible with either kind
}

Sparse wedge(const Sparse& u, const Sparse& v) {
    auto ku = odd_kind(u), kv = odd_kind(v);
    auto bad = [](OddKind k) { return k == OddKind::Mixed || k == OddKind::Even; };
    if (bad(ku) || bad(kv) || (ku != OddKind::Zero && kv != OddKind::Zero && ku != kv))
        throw ContractViolation("wedge: operands must both be theta- or both dtheta-polynomials");
    return product_commutative(u, v);
}

namespace {
void apply_dth(int i, Sparse& f) {
    Sparse out;
    for (auto& [w, c] : f) {
        auto it = std::find(w.th.begin(), w.th.end(), i);
        if (it == w.th.end()) continue;
        Word v = w;
        auto r = it - w.th.begin();
        v.th.erase(v.th.begin() + r);
        out.add(v, (r & 1) ? -c : c);
    }
    f = std::move(out);
}
}  // namespace

Sparse contract(const Sparse& f, const Word& D) {
    Sparse out = f;
    for (auto it = D.dth.rbegin(); it != D.dth.rend(); ++it) apply_dth(*it, out);
    return out;
}

Sparse contract(const Sparse& f, const Sparse& D) {
    Sparse out;
    for (auto& [w, c] : D) out.add(contract(f, w), c);
    return out;
}

Sparse ce_cochain_d(const LieAlgebra& g, const Sparse& b) {
    const int d = g.dim();
    Sparse out;
    for (auto& [w, c] : b) {
        for (std::size_t r = 0; r < w.dth.size(); ++r) {
            int i = w.dth[r];
            Q sgn = (r & 1) ? -c : c;
            for (int j = 0; j < d; ++j)
                for (int k = j + 1; k < d; ++k) {
                    const Q& f = g.f(j, k, i);
                    if (f == 0) continue;
                    std::vector<int> seq(w.dth.begin(), w.dth.begin() + r);
                    seq.push_back(j);
                    seq.push_back(k);
                    seq.insert(seq.end(), w.dth.begin() + r + 1, w.dth.end());
                    int s = sort_odd(seq);
                    if (!s) continue;
                    Word v = w;
                    v.dth = seq;
                    out.add(v, sgn * f * s);
                }
        }
    }
    return out;
}

std::vector<Sparse> d_square_residual(const LieAlgebra& g) {
    std::vector<Sparse> out;
    for (int i = 0; i < g.dim(); ++i) out.push_back(ce_cochain_d(g, ce_cochain_d(g, Sparse(dthw({i})))));
    return out;
}

}  // namespace cebar
