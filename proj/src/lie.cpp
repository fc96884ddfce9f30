#include "cebar/lie.hpp"

#include <json.hpp>

#include <algorithm>

namespace cebar {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), dim_(static_cast<int>(basis.size())), basis_(std::move(basis)) {
    if (dim_ < 1) throw ContractViolation("Lie algebra needs positive dimension");
    f_.assign(dim_ * dim_ * dim_, Q(0));
    br_.assign(dim_ * dim_, {});
}

void LieAlgebra::set_bracket(int i, int j, const std::vector<BracketTerm>& terms) {
    if (!(0 <= i && i < j && j < dim_)) throw ContractViolation("bracket index pair must satisfy 0 <= i < j < dim");
    for (int k = 0; k < dim_; ++k) f_[(i * dim_ + j) * dim_ + k] = f_[(j * dim_ + i) * dim_ + k] = 0;
    for (auto& t : terms) {
        if (t.k < 0 || t.k >= dim_) throw ContractViolation("bracket term index out of range");
        f_[(i * dim_ + j) * dim_ + t.k] += t.c;
        f_[(j * dim_ + i) * dim_ + t.k] -= t.c;
    }
    auto& a = br_[i * dim_ + j];
    auto& b = br_[j * dim_ + i];
    a.clear();
    b.clear();
    for (int k = 0; k < dim_; ++k) {
        if (f(i, j, k) != 0) {
            a.push_back({k, f(i, j, k)});
            b.push_back({k, f(j, i, k)});
        }
    }
}

bool LieAlgebra::abelian() const {
    return std::all_of(f_.begin(), f_.end(), [](const Q& q) { return q == 0; });
}

bool JacobiRow::zero() const {
    return std::all_of(residual.begin(), residual.end(), [](const Q& q) { return q == 0; });
}

namespace {
// [[x_a, x_b], x_c]
void add_double_bracket(const LieAlgebra& g, int a, int b, int c, std::vector<Q>& out) {
    for (auto& t : g.bracket(a, b))
        for (auto& u : g.bracket(t.k, c)) out[u.k] += t.c * u.c;
}
}  // namespace

std::vector<JacobiRow> jacobi_residual(const LieAlgebra& g) {
    std::vector<JacobiRow> rows;
    const int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                JacobiRow r{i, j, k, std::vector<Q>(d, Q(0))};
                add_double_bracket(g, i, j, k, r.residual);
                add_double_bracket(g, j, k, i, r.residual);
                add_double_bracket(g, k, i, j, r.residual);
                rows.push_back(std::move(r));
            }
    return rows;
}

bool is_lie(const LieAlgebra& g) {
    for (auto& r : jacobi_residual(g))
        if (!r.zero()) return false;
    return true;
}

Sparse trace_power_poly(const LieAlgebra& g, int k) {
    if (k < 1) throw ContractViolation("trace_power_poly: k must be positive");
    const int d = g.dim();
    // ad(x_i) has entry (row c, column b) = f_{ib}^c.
    // Expand tr(ad x_{i1} ... ad x_{ik}) over all index words.
    Sparse out;
    std::vector<int> idx(k, 0);
    while (true) {
        // trace of the product via dense multiplication
        std::vector<Q> m(d * d, Q(0));
        for (int r = 0; r < d; ++r) m[r * d + r] = 1;
        for (int s = 0; s < k; ++s) {
            std::vector<Q> n(d * d, Q(0));
            for (int r = 0; r < d; ++r)
                for (int b = 0; b < d; ++b) {
                    if (m[r * d + b] == 0) continue;
                    for (int c = 0; c < d; ++c) {
                        const Q& f = g.f(idx[s], c, b);
                        if (f != 0) n[r * d + c] += m[r * d + b] * f;
                    }
                }
            m.swap(n);
        }
        Q tr = 0;
        for (int r = 0; r < d; ++r) tr += m[r * d + r];
        if (tr != 0) {
            auto w = idx;
            std::sort(w.begin(), w.end());
            out.add(xw(w), tr);
        }
        int p = k - 1;
        while (p >= 0 && ++idx[p] == d) idx[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

std::vector<Q> c1_functional(const LieAlgebra& g) {
    std::vector<Q> c(g.dim(), Q(0));
    for (auto& [w, q] : trace_power_poly(g, 1)) c[w.x[0]] = q;
    return c;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"abelian1", "abelian2", "abelian3", "heisenberg3", "aff1", "sl2"};
    return names;
}

LieAlgebra catalog(const std::string& name) {
    if (name == "abelian1") return LieAlgebra(name, {"x1"});
    if (name == "abelian2") return LieAlgebra(name, {"x1", "x2"});
    if (name == "abelian3") return LieAlgebra(name, {"x1", "x2", "x3"});
    if (name == "heisenberg3") {
        LieAlgebra g(name, {"x1", "x2", "x3"});
        g.set_bracket(0, 1, {{2, 1}});
        return g;
    }
    if (name == "aff1") {
        LieAlgebra g(name, {"a", "b"});
        g.set_bracket(0, 1, {{1, 1}});
        return g;
    }
    if (name == "sl2") {
        LieAlgebra g(name, {"h", "e", "f"});
        g.set_bracket(0, 1, {{1, 2}});
        g.set_bracket(0, 2, {{2, -2}});
        g.set_bracket(1, 2, {{0, 1}});
        return g;
    }
    throw LookupError("unknown catalog algebra '" + name + "'");
}

using nlohmann::json;

LieAlgebra lie_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    auto need = [&](const json& o, const char* key) -> const json& {
        if (!o.is_object() || !o.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
        return o.at(key);
    };
    try {
        std::string name = need(j, "name").get<std::string>();
        int dim = need(j, "dim").get<int>();
        auto basis = need(j, "basis").get<std::vector<std::string>>();
        if (dim < 1 || static_cast<int>(basis.size()) != dim) throw SchemaError("basis length must equal dim >= 1");
        LieAlgebra g(name, basis);
        for (auto& b : need(j, "brackets")) {
            int i = need(b, "i").get<int>(), jj = need(b, "j").get<int>();
            if (!(0 <= i && i < jj && jj < dim)) throw SchemaError("bracket requires 0 <= i < j < dim");
            std::vector<BracketTerm> terms;
            for (auto& t : need(b, "terms")) {
                int k = need(t, "k").get<int>();
                if (k < 0 || k >= dim) throw SchemaError("term index out of range");
                terms.push_back({k, parse_rational(need(t, "c").get<std::string>())});
            }
            g.set_bracket(i, jj, terms);
        }
        return g;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("schema: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

std::string lie_to_json(const LieAlgebra& g) {
    nlohmann::ordered_json j;
    j["name"] = g.name();
    j["dim"] = g.dim();
    j["basis"] = g.basis();
    j["brackets"] = nlohmann::ordered_json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int k = i + 1; k < g.dim(); ++k) {
            if (g.bracket(i, k).empty()) continue;
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (auto& t : g.bracket(i, k)) terms.push_back({{"k", t.k}, {"c", to_string(t.c)}});
            j["brackets"].push_back({{"i", i}, {"j", k}, {"terms", terms}});
        }
    return j.dump(2);
}

}  // namespace cebar
