#include "cebar/ainfty.hpp"

namespace cebar {

namespace {

Q sign_of(long e) { return (e & 1) ? Q(-1) : Q(1); }

Args slice(const Args& v, std::size_t i, std::size_t j) { return Args(v.begin() + i, v.begin() + j); }

Args splice(const Args& v, std::size_t i, std::size_t j, const Word& w) {
    Args out(v.begin(), v.begin() + i);
    out.push_back(w);
    out.insert(out.end(), v.begin() + j, v.end());
    return out;
}

using Outer = std::function<Vec(const Args&, const Key&, const Args&)>;

// Sum over collapsing one contiguous block of (a|k|b) through d_A, d_K or d_B, followed by outer.
Vec apply_coderivation(const TaylorAlgebra& A, const TaylorAlgebra& B, const TaylorBimodule& K, const Outer& outer,
                       const Args& a, const Key& k, const Args& b) {
    const std::size_t m = a.size(), n = b.size();
    Vec out;
    long pre = 0;  // sum of shifted degrees passed so far
    for (std::size_t i = 0; i <= m; ++i) {
        Q s = sign_of(pre);
        for (std::size_t j = i; j <= m; ++j)
            for (auto& [w, c] : A.d(slice(a, i, j))) out.add(outer(splice(a, i, j, w), k, b), s * c);
        for (std::size_t j = 0; j <= n; ++j)
            for (auto& [kk, c] : K.d(slice(a, i, m), k, slice(b, 0, j)))
                out.add(outer(slice(a, 0, i), kk, slice(b, j, n)), s * c);
        if (i < m) pre += A.degree(a[i]) - 1;
    }
    pre += K.degree(k) - 1;
    for (std::size_t i = 0; i <= n; ++i) {
        Q s = sign_of(pre);
        for (std::size_t j = i; j <= n; ++j)
            for (auto& [w, c] : B.d(slice(b, i, j))) out.add(outer(a, k, splice(b, i, j, w)), s * c);
        if (i < n) pre += B.degree(b[i]) - 1;
    }
    return out;
}

}  // namespace

Vec lift(const Sparse& s) {
    Vec out;
    for (auto& [w, c] : s) out.add(Key{w}, c);
    return out;
}

Q md_sign(const std::vector<int>& degrees) {
    const long N = static_cast<long>(degrees.size());
    long e = N * (N - 1) / 2;
    for (long i = 0; i < N; ++i) e += (N - 1 - i) * degrees[i];
    return sign_of(e);
}

Op m_from_d(Op d, std::function<int(const Word&)> degree) {
    return [d, degree](const Args& v) {
        std::vector<int> deg;
        for (auto& w : v) deg.push_back(degree(w));
        return d(v) * md_sign(deg);
    };
}

Op d_from_m(Op m, std::function<int(const Word&)> degree) { return m_from_d(std::move(m), std::move(degree)); }

TaylorAlgebra dg_algebra(std::function<int(const Word&)> degree, std::function<Sparse(const Word&)> diff,
                         std::function<Sparse(const Word&, const Word&)> product) {
    TaylorAlgebra A;
    A.degree = degree;
    A.d = [degree, diff, product](const Args& v) -> Sparse {
        if (v.size() == 1) return diff(v[0]);
        // -s m (s^{-1} (x) s^{-1}) picks up (-1)^{|a|-1} from s^{-1} passing s a
        if (v.size() == 2) return product(v[0], v[1]) * sign_of(degree(v[0]));
        return Sparse();
    };
    return A;
}

TaylorBimodule dg_bimodule(const TaylorAlgebra& A, std::function<int(const Key&)> degree,
                           std::function<Vec(const Key&)> diff, std::function<Vec(const Word&, const Key&)> left,
                           std::function<Vec(const Key&, const Word&)> right) {
    TaylorBimodule K;
    K.degree = degree;
    auto adeg = A.degree;
    K.d = [adeg, degree, diff, left, right](const Args& a, const Key& k, const Args& b) -> Vec {
        if (a.empty() && b.empty()) return diff(k);
        if (a.size() == 1 && b.empty()) return left(a[0], k) * sign_of(adeg(a[0]));
        if (a.empty() && b.size() == 1) return right(k, b[0]) * sign_of(degree(k));
        return Vec();
    };
    return K;
}

TaylorBimodule algebra_as_bimodule(const TaylorAlgebra& A) {
    TaylorBimodule K;
    auto deg = A.degree;
    K.degree = [deg](const Key& k) { return deg(k.at(0)); };
    auto d = A.d;
    K.d = [d](const Args& a, const Key& k, const Args& b) {
        Args all = a;
        all.push_back(k.at(0));
        all.insert(all.end(), b.begin(), b.end());
        return lift(d(all));
    };
    return K;
}

TaylorBimodule tensor_bimodule(const TaylorBimodule& K1, const TaylorAlgebra& B, const TaylorBimodule& K2) {
    TaylorBimodule T;
    T.degree = [K1, K2, B](const Key& k) {
        int s = K1.degree(Key{k.front()}) + K2.degree(Key{k.back()});
        for (std::size_t i = 1; i + 1 < k.size(); ++i) s += B.degree(k[i]) - 1;
        return s;
    };
    T.d = [K1, K2, B](const Args& a, const Key& key, const Args& c) -> Vec {
        if (key.size() < 2) throw ContractViolation("tensor_bimodule: malformed key");
        const Word& k1 = key.front();
        const Word& k2 = key.back();
        const Args bs(key.begin() + 1, key.end() - 1);
        const std::size_t q = bs.size();
        Vec out;
        if (!a.empty() && !c.empty()) return out;
        auto assemble = [](const Key& head, const Args& mid, const Key& tail) {
            Key r = head;
            r.insert(r.end(), mid.begin(), mid.end());
            r.insert(r.end(), tail.begin(), tail.end());
            return r;
        };
        int k1deg = K1.degree(Key{k1});
        long bsum = 0;
        for (auto& b : bs) bsum += B.degree(b) - 1;
        if (!a.empty() || c.empty()) {
            // K1 acts on the left block: d_{K1}^{m,l}(a|k1|b_1..b_l) (x) (b_{l+1}..b_q) (x) k2
            for (std::size_t l = 0; l <= q; ++l)
                for (auto& [kk, co] : K1.d(a, Key{k1}, slice(bs, 0, l)))
                    out.add(assemble(kk, slice(bs, l, q), Key{k2}), co);
            if (!a.empty()) return out;
        }
        if (c.empty()) {
            long pre = k1deg - 1;
            for (std::size_t l = 0; l <= q; ++l) {
                for (std::size_t j = l; j <= q; ++j)
                    for (auto& [w, co] : B.d(slice(bs, l, j)))
                        out.add(assemble(Key{k1}, splice(bs, l, j, w), Key{k2}), sign_of(pre) * co);
                if (l < q) pre += B.degree(bs[l]) - 1;
            }
        }
        // K2 acts on the right block, for c empty or not
        Q s = sign_of(k1deg + bsum);
        for (std::size_t l = 0; l <= q; ++l)
            for (auto& [kk, co] : K2.d(slice(bs, l, q), Key{k2}, c)) {
                Key head{k1};
                head.insert(head.end(), bs.begin(), bs.begin() + l);
                out.add(assemble(head, Args{}, kk), s * co);
            }
        return out;
    };
    return T;
}

BimoduleMorphism mu_morphism(const TaylorAlgebra& A, const TaylorBimodule& K) {
    BimoduleMorphism mu;
    mu.phi = [A, K](const Args& a, const Key& key, const Args& b) -> Vec {
        // key = [a, a~_1, ..., a~_q, k]
        long e = 0;
        for (auto& w : a) e += A.degree(w) - 1;
        e += A.degree(key.front());
        for (std::size_t i = 1; i + 1 < key.size(); ++i) e += A.degree(key[i]) - 1;
        Args all = a;
        all.insert(all.end(), key.begin(), key.end() - 1);
        return K.d(all, Key{key.back()}, b) * sign_of(e);
    };
    return mu;
}

BimoduleMorphism identity_morphism() {
    BimoduleMorphism id;
    id.phi = [](const Args& a, const Key& k, const Args& b) {
        Vec out;
        if (a.empty() && b.empty()) out.add(k, 1);
        return out;
    };
    return id;
}

BimoduleMorphism strict_morphism(std::function<Vec(const Key&)> f) {
    BimoduleMorphism m;
    m.phi = [f](const Args& a, const Key& k, const Args& b) {
        if (a.empty() && b.empty()) return f(k);
        return Vec();
    };
    return m;
}

Vec bimodule_square_residual(const TaylorAlgebra& A, const TaylorAlgebra& B, const TaylorBimodule& K, const Args& a,
                             const Key& k, const Args& b) {
    return apply_coderivation(A, B, K, K.d, a, k, b);
}

Vec morphism_residual(const TaylorAlgebra& A, const TaylorAlgebra& B, const TaylorBimodule& K1,
                      const TaylorBimodule& K2, const BimoduleMorphism& phi, const Args& a, const Key& k,
                      const Args& b) {
    Vec out = apply_coderivation(A, B, K1, phi.phi, a, k, b);
    const std::size_t m = a.size(), n = b.size();
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            for (auto& [kk, c] : phi.phi(slice(a, i, m), k, slice(b, 0, j)))
                out.add(K2.d(slice(a, 0, i), kk, slice(b, j, n)), -c);
    return out;
}

}  // namespace cebar
