#include "cebar/linalg.hpp"

namespace cebar {

std::vector<int> rref(QMat& m, int cols) {
    std::vector<int> piv;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (int k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (int k = c; k < cols; ++k)
                if (m[r][k] != 0) m[i][k] -= f * m[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

int rank(QMat m, int cols) { return static_cast<int>(rref(m, cols).size()); }

QMat nullspace(QMat m, int cols) {
    auto piv = rref(m, cols);
    std::vector<int> is_piv(cols, -1);
    for (std::size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = static_cast<int>(i);
    QMat out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f] >= 0) continue;
        QVec v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

Subspace::Subspace(QMat rows, int dim) : dim_(dim), basis_(std::move(rows)) { pivots_ = rref(basis_, dim_); }

QVec Subspace::reduce(QVec v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Q f = v[pivots_[i]];
        if (f == 0) continue;
        for (int k = 0; k < dim_; ++k)
            if (basis_[i][k] != 0) v[k] -= f * basis_[i][k];
    }
    return v;
}

bool Subspace::contains(const QVec& v) const {
    for (auto& c : reduce(v))
        if (c != 0) return false;
    return true;
}

}  // namespace cebar
