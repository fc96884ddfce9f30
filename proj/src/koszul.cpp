#include "cebar/koszul.hpp"

#include "cebar/ce.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace cebar {

using nlohmann::json;

QuadraticData quadratic_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("dimV") || !j.contains("R")) throw SchemaError("quadratic data needs dimV and R");
        QuadraticData q;
        q.dimV = j.at("dimV").get<int>();
        if (q.dimV < 1) throw SchemaError("dimV must be positive");
        for (auto& rel : j.at("R")) {
            Tensor t;
            for (auto& term : rel) {
                int i = term.at("i").get<int>(), k = term.at("j").get<int>();
                if (i < 0 || k < 0 || i >= q.dimV || k >= q.dimV) throw SchemaError("relation index out of range");
                t.add(TWord{i, k}, parse_rational(term.at("c").get<std::string>()));
            }
            q.R.push_back(t);
        }
        QMat m;
        for (auto& r : q.R) m.push_back(tensor_coords(r, q.dimV, 2));
        if (rank(m, q.dimV * q.dimV) != static_cast<int>(q.R.size())) throw SchemaError("relations are linearly dependent");
        return q;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("schema: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

std::string quadratic_to_json(const QuadraticData& q) {
    nlohmann::ordered_json j;
    j["dimV"] = q.dimV;
    j["R"] = nlohmann::ordered_json::array();
    for (auto& r : q.R) {
        nlohmann::ordered_json rel = nlohmann::ordered_json::array();
        for (auto& [w, c] : r) rel.push_back({{"i", w[0]}, {"j", w[1]}, {"c", to_string(c)}});
        j["R"].push_back(rel);
    }
    return j.dump(2);
}

QuadraticData symmetric_data(int dimV) {
    QuadraticData q{dimV, {}};
    for (int i = 0; i < dimV; ++i)
        for (int k = i + 1; k < dimV; ++k) {
            Tensor t(TWord{i, k});
            t.add(TWord{k, i}, -1);
            q.R.push_back(t);
        }
    return q;
}

QuadraticData full_data(int dimV) {
    QuadraticData q{dimV, {}};
    for (int i = 0; i < dimV; ++i)
        for (int k = 0; k < dimV; ++k) q.R.emplace_back(TWord{i, k});
    return q;
}

namespace {

long ipow(int d, int n) {
    long r = 1;
    while (n-- > 0) r *= d;
    return r;
}

TWord word_of(long idx, int d, int n) {
    TWord w(n);
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return w;
}

long index_of(const TWord& w, int d) {
    long idx = 0;
    for (int i : w) idx = idx * d + i;
    return idx;
}

TWord concat(TWord a, const TWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string render_tword(const TWord& w, bool brackets) {
    if (brackets) {
        std::string s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
        return s + "]";
    }
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*v" : "v") + std::to_string(w[i] + 1);
    return s;
}

}  // namespace

QVec tensor_coords(const Tensor& t, int dimV, int n) {
    QVec v(ipow(dimV, n), Q(0));
    for (auto& [w, c] : t) {
        if (static_cast<int>(w.size()) != n) throw ContractViolation("tensor_coords: inhomogeneous tensor");
        v[index_of(w, dimV)] = c;
    }
    return v;
}

Tensor tensor_from_coords(const QVec& v, int dimV, int n) {
    Tensor t;
    for (std::size_t i = 0; i < v.size(); ++i) t.add(word_of(static_cast<long>(i), dimV, n), v[i]);
    return t;
}

Tensor dual_product(const Tensor& phi, const Tensor& psi) {
    Tensor out;
    for (auto& [a, ca] : phi)
        for (auto& [b, cb] : psi) out.add(concat(b, a), ca * cb);
    return out;
}

std::string render_kelem(const KElem& k) {
    if (k.zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [key, c] : k) {
        Q a = abs(c);
        std::string body = render_tword(key.first, false) + " (x) " + render_tword(key.second, true);
        if (a != 1) body = to_string(a) + "*" + body;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        out += body;
        first = false;
    }
    return out;
}

KoszulComplex::KoszulComplex(QuadraticData q) : q_(std::move(q)) {}

const std::vector<Tensor>& KoszulComplex::dual_piece(int n) const {
    if (n < 0) throw ContractViolation("dual_piece: negative arity");
    if (auto it = pieces_.find(n); it != pieces_.end()) return it->second;
    const int d = q_.dimV;
    std::vector<Tensor> out;
    if (n <= 1) {
        for (long i = 0; i < ipow(d, n); ++i) out.emplace_back(word_of(i, d, n));
    } else {
        // v lies in V^i R V^{n-2-i} iff every functional from the annihilator of R kills it in slots i, i+1
        QMat rm;
        for (auto& r : q_.R) rm.push_back(tensor_coords(r, d, 2));
        QMat perp = nullspace(rm, d * d);
        QMat rows;
        for (int i = 0; i + 2 <= n; ++i)
            for (auto& f : perp)
                for (long pre = 0; pre < ipow(d, i); ++pre)
                    for (long suf = 0; suf < ipow(d, n - 2 - i); ++suf) {
                        QVec row(ipow(d, n), Q(0));
                        for (int ab = 0; ab < d * d; ++ab) {
                            long idx = (pre * d * d + ab) * ipow(d, n - 2 - i) + suf;
                            row[idx] = f[ab];
                        }
                        rows.push_back(std::move(row));
                    }
        for (auto& v : nullspace(rows, static_cast<int>(ipow(d, n)))) out.push_back(tensor_from_coords(v, d, n));
    }
    return pieces_.emplace(n, std::move(out)).first->second;
}

const Subspace& KoszulComplex::ideal(int n) const {
    if (auto it = ideals_.find(n); it != ideals_.end()) return *it->second;
    const int d = q_.dimV;
    QMat rows;
    for (int i = 0; i + 2 <= n; ++i)
        for (auto& r : q_.R)
            for (long pre = 0; pre < ipow(d, i); ++pre)
                for (long suf = 0; suf < ipow(d, n - 2 - i); ++suf) {
                    Tensor t;
                    for (auto& [w, c] : r) t.add(concat(concat(word_of(pre, d, i), w), word_of(suf, d, n - 2 - i)), c);
                    rows.push_back(tensor_coords(t, d, n));
                }
    auto s = std::make_unique<Subspace>(rows, static_cast<int>(ipow(d, n)));
    return *ideals_.emplace(n, std::move(s)).first->second;
}

Tensor KoszulComplex::reduce_A(const Tensor& a) const {
    std::map<int, Tensor> parts;
    for (auto& [w, c] : a) parts[static_cast<int>(w.size())].add(w, c);
    Tensor out;
    for (auto& [n, t] : parts) {
        if (n < 2) {
            out += t;
            continue;
        }
        out += tensor_from_coords(ideal(n).reduce(tensor_coords(t, q_.dimV, n)), q_.dimV, n);
    }
    return out;
}

KElem KoszulComplex::normal(const KElem& k) const {
    std::map<TWord, Tensor> byc;
    for (auto& [key, c] : k) byc[key.second].add(key.first, c);
    KElem out;
    for (auto& [cw, a] : byc)
        for (auto& [aw, c] : reduce_A(a)) out.add({aw, cw}, c);
    return out;
}

KElem KoszulComplex::d(const KElem& k) const {
    KElem out;
    for (auto& [key, c] : k) {
        if (key.second.empty()) continue;
        TWord a = key.first;
        a.push_back(key.second.front());
        out.add({a, TWord(key.second.begin() + 1, key.second.end())}, c);
    }
    return normal(out);
}

KElem KoszulComplex::act(const KElem& k, const Tensor& phi) const {
    KElem out;
    for (auto& [key, c] : k)
        for (auto& [w, cw] : phi) {
            const auto& cv = key.second;
            if (w.size() > cv.size()) continue;
            std::size_t head = cv.size() - w.size();
            if (!std::equal(w.begin(), w.end(), cv.begin() + static_cast<long>(head))) continue;
            out.add({key.first, TWord(cv.begin(), cv.begin() + static_cast<long>(head))}, c * cw);
        }
    return normal(out);
}

KElem KoszulComplex::left(const Tensor& a, const KElem& k) const {
    KElem out;
    for (auto& [w, cw] : a)
        for (auto& [key, c] : k) out.add({concat(w, key.first), key.second}, cw * c);
    return normal(out);
}

KoszulReport KoszulComplex::residuals(int Nmax, int adeg) const {
    const int dv = q_.dimV;
    KoszulReport rep;
    std::vector<TWord> awords, duals;
    for (int n = 0; n <= adeg; ++n)
        for (long i = 0; i < ipow(dv, n); ++i) awords.push_back(word_of(i, dv, n));
    for (int n = 0; n <= Nmax; ++n)
        for (long i = 0; i < ipow(dv, n); ++i) duals.push_back(word_of(i, dv, n));
    auto record = [&](const char* check, const std::string& input, const KElem& r) {
        ++rep.checked;
        if (!r.zero()) rep.failures.push_back({check, input, render_kelem(r)});
    };
    for (int n = 0; n <= Nmax; ++n)
        for (auto& c : dual_piece(n))
            for (auto& aw : awords) {
                KElem k;
                for (auto& [cw, cc] : c) k.add({aw, cw}, cc);
                k = normal(k);
                std::string in = render_kelem(k);
                record("d_squared", in, d(d(k)));
                for (int g = 0; g < dv; ++g) {
                    Tensor t(TWord{g});
                    record("d_left_linear", in, d(left(t, k)) - left(t, d(k)));
                }
                for (auto& p : duals) {
                    Tensor phi(p);
                    std::string inp = in + " . " + render_tword(p, true);
                    KElem kp = act(k, phi);
                    record("d_right_action", inp, d(kp) - act(d(k), phi));
                    for (int g = 0; g < dv; ++g) {
                        Tensor t(TWord{g});
                        record("actions_commute", inp, left(t, kp) - act(left(t, k), phi));
                    }
                    for (auto& s : duals) {
                        if (p.size() + s.size() > static_cast<std::size_t>(n)) continue;
                        Tensor psi(s);
                        record("right_associative", inp + " . " + render_tword(s, true),
                               act(kp, psi) - act(k, dual_product(phi, psi)));
                    }
                }
            }
    return rep;
}

KElem ce_to_koszul(const KoszulComplex& K, const Word& w) {
    std::vector<int> perm(w.th.size());
    std::iota(perm.begin(), perm.end(), 1);
    KElem out;
    do {
        TWord c;
        for (int p : perm) c.push_back(w.th[p - 1]);
        out.add({w.x, c}, koszul_sign(perm, std::vector<int>(perm.size(), 1)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return K.normal(out);
}

Tensor dth_to_dual(const std::vector<int>& J) {
    TWord w(J.rbegin(), J.rend());
    return Tensor(w, J.size() & 1 ? -1 : 1);
}

KoszulReport ce_isomorphism_check(int dimV, int Nmax, int adeg) {
    KoszulComplex K(symmetric_data(dimV));
    Uea U(catalog("abelian" + std::to_string(dimV)));
    KoszulReport rep;
    auto map = [&](const Sparse& e) {
        KElem out;
        for (auto& [w, c] : e) out.add(ce_to_koszul(K, w), c);
        return out;
    };
    auto record = [&](const char* check, const std::string& input, const KElem& r) {
        ++rep.checked;
        if (!r.zero()) rep.failures.push_back({check, input, render_kelem(r)});
    };
    // the images of th^I span each dual piece
    for (int n = 0; n <= std::min(Nmax, dimV); ++n) {
        QMat img;
        for (auto& I : subsets(dimV, n, n)) {
            KElem k = ce_to_koszul(K, thw(I));
            Tensor t;
            for (auto& [key, c] : k) t.add(key.second, c);
            img.push_back(tensor_coords(t, dimV, n));
        }
        const auto& piece = K.dual_piece(n);
        QMat both = img;
        for (auto& p : piece) both.push_back(tensor_coords(p, dimV, n));
        int cols = static_cast<int>(img.empty() ? 1 : img[0].size());
        ++rep.checked;
        if (rank(img, cols) != static_cast<int>(piece.size()) || rank(both, cols) != static_cast<int>(piece.size()))
            rep.failures.push_back({"dual_piece_image", "n=" + std::to_string(n), "rank mismatch"});
    }
    for (auto& I : subsets(dimV, Nmax))
        for (auto& a : monomials(dimV, adeg)) {
            Word w = a;
            w.th = I;
            Sparse e(w);
            std::string in = "x" + std::to_string(w.x.size()) + " th" + std::to_string(I.size()) + " " +
                             render_kelem(ce_to_koszul(K, w));
            record("differential", in, map(d_CE(U, e)) - K.d(map(e)));
            for (int g = 0; g < dimV; ++g)
                record("left_action", in, map(m_L(U, Sparse(xw({g})), e)) - K.left(Tensor(TWord{g}), map(e)));
            for (auto& J : subsets(dimV, dimV))
                record("right_action", in, map(m_R(e, Sparse(dthw(J)))) - K.act(map(e), dth_to_dual(J)));
        }
    return rep;
}

}  // namespace cebar
