#include "cebar/ce.hpp"

#include "cebar/linalg.hpp"

#include <algorithm>
#include <map>

namespace cebar {

namespace {

Word with_theta(const Word& w, std::vector<int> th) {
    Word v = w;
    v.th = std::move(th);
    return v;
}

// sum_{k<l} (-1)^{k+l} f_{i_k i_l}^j u th_j th^{I minus {i_k, i_l}}
void add_bracket_part(const LieAlgebra& g, const Word& w, const Q& c, Sparse& out) {
    const auto& I = w.th;
    for (std::size_t k = 0; k < I.size(); ++k)
        for (std::size_t l = k + 1; l < I.size(); ++l) {
            Q sgn = ((k + l) & 1) ? -c : c;
            for (auto& t : g.bracket(I[k], I[l])) {
                std::vector<int> seq{t.k};
                for (std::size_t r = 0; r < I.size(); ++r)
                    if (r != k && r != l) seq.push_back(I[r]);
                int s = sort_odd(seq);
                if (s) out.add(with_theta(w, seq), sgn * t.c * s);
            }
        }
}

}  // namespace

Sparse d_CE(const Uea& U, const Sparse& e) {
    Sparse out;
    for (auto& [w, c] : e) {
        Word u = w;
        u.th.clear();
        for (std::size_t k = 0; k < w.th.size(); ++k) {
            std::vector<int> rest = w.th;
            rest.erase(rest.begin() + k);
            for (auto& [v, cv] : U.mul_letter(Sparse(u), {false, w.th[k]}))
                out.add(with_theta(v, rest), Q((k & 1) ? -1 : 1) * c * cv);
        }
        add_bracket_part(U.algebra(), w, c, out);
    }
    return out;
}

Sparse d2_coalgebra(const LieAlgebra& g, const Sparse& t) {
    Sparse out;
    for (auto& [w, c] : t) add_bracket_part(g, w, c, out);
    return out;
}

Sparse m_L(const Uea& U, const Sparse& u1, const Sparse& e) {
    Sparse out;
    for (auto& [w, c] : e) {
        Word u = w;
        u.th.clear();
        for (auto& [v, cv] : U.product(u1, Sparse(u))) out.add(with_theta(v, w.th), c * cv);
    }
    return out;
}

Sparse m_R(const Sparse& e, const Sparse& b) {
    Sparse out;
    for (auto& [wb, cb] : b) {
        long J = static_cast<long>(wb.dth.size());
        for (auto& [we, ce] : e) {
            long I = static_cast<long>(we.th.size());
            Q sgn = ((I * J) & 1) ? -1 : 1;
            out.add(contract(Sparse(we), wb), sgn * ce * cb);
        }
    }
    return out;
}

Sparse leibniz_residual(const Uea& U, const std::vector<int>& I, const std::vector<int>& J) {
    const auto& g = U.algebra();
    Word D = dthw(I);
    Sparse thJ(thw(J));
    Sparse lhs = d_CE(U, contract(thJ, D));
    Sparse t1 = contract(thJ, ce_cochain_d(g, Sparse(D)));
    Sparse t2 = contract(d_CE(U, thJ), D);
    Sparse r = lhs - t1;
    r.add(t2, (I.size() & 1) ? 1 : -1);
    return r;
}

Sparse twisting_kappa(const Sparse& t) {
    Sparse out;
    for (auto& [w, c] : t)
        if (w.th.size() == 1 && w.x.empty() && w.dth.empty()) out.add(xw({w.th[0]}), c);
    return out;
}

Sparse d_kappa(const Uea& U, const Sparse& e) {
    Sparse out;
    for (auto& [w, c] : e) {
        Word u = w;
        u.th.clear();
        const int q = static_cast<int>(w.th.size());
        // unshuffle coproduct: th^I = sign(I1, I) th^{I1} th^{I \ I1}
        for (int mask = 0; mask < (1 << q); ++mask) {
            std::vector<int> I1, I2, perm;
            for (int r = 0; r < q; ++r)
                if (mask >> r & 1) { I1.push_back(w.th[r]); perm.push_back(r + 1); }
            for (int r = 0; r < q; ++r)
                if (!(mask >> r & 1)) { I2.push_back(w.th[r]); perm.push_back(r + 1); }
            Q s = koszul_sign(perm, std::vector<int>(q, 1));
            Sparse k = twisting_kappa(Sparse(thw(I1)));
            if (k.zero()) continue;
            for (auto& [v, cv] : U.product(Sparse(u), k)) out.add(with_theta(v, I2), c * cv * s);
        }
    }
    return out;
}

std::vector<Word> monomials(int dim, int maxdeg, int mindeg) {
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) >= mindeg) out.push_back(xw(cur));
        if (static_cast<int>(cur.size()) == maxdeg) return;
        for (int i = start; i < dim; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> subsets(int dim, int maxsize, int minsize) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < dim; ++i)
            if (mask >> i & 1) s.push_back(i);
        int n = static_cast<int>(s.size());
        if (n >= minsize && n <= maxsize) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> ce_basis(int dim, int N) {
    std::vector<Word> out;
    for (auto& I : subsets(dim, N))
        for (auto& m : monomials(dim, N - static_cast<int>(I.size()))) out.push_back(with_theta(m, I));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CohomologyRow> truncated_cohomology(const LieAlgebra& g, int N, long budget) {
    if (N < 1) throw ContractViolation("truncated_cohomology: N must be at least 1");
    const int d = g.dim();
    // per-degree bases, indexed by q = |I|
    std::vector<std::vector<Word>> basis(d + 1);
    for (auto& w : ce_basis(d, N)) basis[w.th.size()].push_back(w);
    long total = 0;
    for (auto& b : basis) total += static_cast<long>(b.size());
    if (total > budget) throw ResourceError("truncated_cohomology: basis size " + std::to_string(total) + " exceeds budget");
    Uea U(g);
    // matrix of d from degree -q to -q+1: rows indexed by source, columns by target coordinates
    auto dmat = [&](int q) {
        std::map<Word, int> pos;
        for (std::size_t i = 0; i < basis[q - 1].size(); ++i) pos[basis[q - 1][i]] = static_cast<int>(i);
        QMat m;
        for (auto& w : basis[q]) {
            QVec row(basis[q - 1].size(), Q(0));
            for (auto& [v, c] : d_CE(U, Sparse(w))) row.at(pos.at(v)) = c;
            m.push_back(std::move(row));
        }
        return m;
    };
    std::vector<QMat> D(d + 1);
    std::vector<int> rk(d + 2, 0);
    for (int q = 1; q <= d; ++q) {
        if (basis[q].empty()) continue;
        D[q] = dmat(q);
        rk[q] = rank(D[q], static_cast<int>(basis[q - 1].size()));
    }
    std::vector<CohomologyRow> rows;
    for (int q = std::min(d, N); q >= 0; --q) {
        CohomologyRow r{-q, N, static_cast<int>(basis[q].size()), rk[q + 1], q >= 1 ? rk[q] : 0, 0, true};
        r.dim_H = r.dim - r.rank_in - r.rank_out;
        if (q >= 1 && !basis[q].empty()) {
            const int n = static_cast<int>(basis[q].size());
            const int nt = static_cast<int>(basis[q - 1].size());
            // cocycles supported in filtration <= N-1: kernel of d^T restricted to those rows
            std::vector<int> low;
            for (int i = 0; i < n; ++i)
                if (total_length(basis[q][i]) <= N - 1) low.push_back(i);
            QMat cols(nt, QVec(low.size(), Q(0)));
            for (std::size_t a = 0; a < low.size(); ++a)
                for (int t = 0; t < nt; ++t) cols[t][a] = D[q][low[a]][t];
            QMat z = nullspace(cols, static_cast<int>(low.size()));
            QMat boundaries;
            if (q + 1 <= d) boundaries = D[q + 1];
            int rb = rank(boundaries, n);
            for (auto& zv : z) {
                QVec full(n, Q(0));
                for (std::size_t a = 0; a < low.size(); ++a) full[low[a]] = zv[a];
                boundaries.push_back(full);
            }
            r.stable = rank(boundaries, n) == rb;
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace cebar
