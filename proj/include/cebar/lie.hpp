#pragma once

#include "cebar/core.hpp"

#include <string>
#include <vector>

namespace cebar {

struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BracketTerm {
    int k;
    Q c;
};

class LieAlgebra {
public:
    LieAlgebra(std::string name, std::vector<std::string> basis);

    // Sets [x_i, x_j] for i < j. Validity is not checked here.
    void set_bracket(int i, int j, const std::vector<BracketTerm>& terms);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis() const { return basis_; }
    // f_{ij}^k for any ordered pair, antisymmetric in (i, j).
    const Q& f(int i, int j, int k) const { return f_[(i * dim_ + j) * dim_ + k]; }
    // Nonzero terms of [x_i, x_j].
    const std::vector<BracketTerm>& bracket(int i, int j) const { return br_[i * dim_ + j]; }
    bool abelian() const;

private:
    std::string name_;
    int dim_;
    std::vector<std::string> basis_;
    std::vector<Q> f_;
    std::vector<std::vector<BracketTerm>> br_;
};

struct JacobiRow {
    int i, j, k;
    std::vector<Q> residual;  // coordinates in g
    bool zero() const;
};

std::vector<JacobiRow> jacobi_residual(const LieAlgebra& g);
bool is_lie(const LieAlgebra& g);

// tr((ad xi)^k) as a polynomial in the coordinates; k >= 1.
Sparse trace_power_poly(const LieAlgebra& g, int k);
// tr(ad x_i) for each basis vector.
std::vector<Q> c1_functional(const LieAlgebra& g);

const std::vector<std::string>& catalog_names();
LieAlgebra catalog(const std::string& name);

// JSON (de)serialization; indices in the file are 0-based.
LieAlgebra lie_from_json(const std::string& text);
std::string lie_to_json(const LieAlgebra& g);

}  // namespace cebar
