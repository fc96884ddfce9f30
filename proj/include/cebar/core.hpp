#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cebar {

using Q = mpq_class;

std::string to_string(const Q& q);
// Accepts "p" or "p/q" with an optional leading minus; throws std::invalid_argument.
Q parse_rational(const std::string& s);

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Monomial x^alpha th^I dth^J. Indices are 0-based internally.
struct Word {
    std::vector<int> x;
    std::vector<int> th;
    std::vector<int> dth;

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

    int odd_degree() const { return static_cast<int>(dth.size()) - static_cast<int>(th.size()); }
    bool empty() const { return x.empty() && th.empty() && dth.empty(); }
};

Word xw(std::vector<int> x);
Word thw(std::vector<int> th);
Word dthw(std::vector<int> dth);

// Finite linear combination with exact coefficients; zero terms are never stored.
template <class K>
class Lin {
public:
    using map_type = std::map<K, Q>;

    Lin() = default;
    Lin(const K& k, const Q& c = 1) { add(k, c); }

    void add(const K& k, const Q& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (fresh) it->second.canonicalize();
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(const Lin& o, const Q& c) {
        if (c == 0) return;
        for (auto& [k, v] : o.terms_) add(k, v * c);
    }
    Q coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Q(0) : it->second;
    }

    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    Lin& operator+=(const Lin& o) { add(o, 1); return *this; }
    Lin& operator-=(const Lin& o) { add(o, -1); return *this; }
    Lin& operator*=(const Q& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& kv : terms_) kv.second *= c;
        return *this;
    }
    friend Lin operator+(Lin a, const Lin& b) { return a += b; }
    friend Lin operator-(Lin a, const Lin& b) { return a -= b; }
    friend Lin operator*(Lin a, const Q& c) { return a *= c; }
    friend Lin operator*(const Q& c, Lin a) { return a *= c; }
    Lin operator-() const { return *this * Q(-1); }
    bool operator==(const Lin& o) const { return terms_ == o.terms_; }

private:
    map_type terms_;
};

using Sparse = Lin<Word>;

Sparse normalize(const std::vector<std::pair<Word, Q>>& raw);

// Sign of reordering graded factors: the result lists the factor at position perm[0] first, etc.
// perm is 1-based.
Q koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

// Sorts a sequence of odd indices; returns 0 on repetition, else the sign of the sort.
int sort_odd(std::vector<int>& idx);

// Product of canonical words treating x as commuting even variables and th, dth as
// two sets of odd variables (dth is written after th).
Sparse word_product_commutative(const Word& a, const Word& b);
Sparse product_commutative(const Sparse& a, const Sparse& b);

int total_length(const Word& w);

}  // namespace cebar
