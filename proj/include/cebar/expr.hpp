#pragma once

#include "cebar/lie.hpp"

namespace cebar {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

// Text form: x1^2*x3 th[1,3] dth[2]; odd indices are 1-based, terms joined by " + " / " - ".
std::string render_word(const Word& w, const std::vector<std::string>& names);
std::string render(const Sparse& e, const std::vector<std::string>& names);
std::string render(const Sparse& e, const LieAlgebra& g);

// Grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := rational? factor (('*')? factor)*  |  rational
//   factor := name ('^' uint)? | 'th[' ints ']' | 'dth[' ints ']' | '(' expr ')'
// Factors multiply graded-commutatively; juxtaposition is multiplication.
Sparse parse_expression(const std::string& src, const std::vector<std::string>& names);
Sparse parse_expression(const std::string& src, const LieAlgebra& g);

}  // namespace cebar
