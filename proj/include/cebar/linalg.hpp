#pragma once

#include "cebar/core.hpp"

#include <vector>

namespace cebar {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major, rows may be empty only when cols == 0

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m, int cols);
int rank(QMat m, int cols);
// Basis of {v : m v = 0}.
QMat nullspace(QMat m, int cols);

// Row space with a fixed reduced basis, for canonical reduction modulo a subspace.
class Subspace {
public:
    Subspace(QMat rows, int dim);
    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const QMat& basis() const { return basis_; }
    // Canonical representative of v modulo the subspace.
    QVec reduce(QVec v) const;
    bool contains(const QVec& v) const;

private:
    int dim_;
    QMat basis_;
    std::vector<int> pivots_;
};

}  // namespace cebar
