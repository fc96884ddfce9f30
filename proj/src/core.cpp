#include "cebar/core.hpp"

#include <algorithm>
#include <regex>

namespace cebar {

std::string to_string(const Q& q) {
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

Q parse_rational(const std::string& s) {
    static const std::regex re(R"(-?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(s, re)) throw std::invalid_argument("malformed rational '" + s + "'");
    auto slash = s.find('/');
    if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    Q q(s);
    q.canonicalize();
    return q;
}

Word xw(std::vector<int> x) { return Word{std::move(x), {}, {}}; }
Word thw(std::vector<int> th) { return Word{{}, std::move(th), {}}; }
Word dthw(std::vector<int> dth) { return Word{{}, {}, std::move(dth)}; }

Sparse normalize(const std::vector<std::pair<Word, Q>>& raw) {
    Sparse out;
    for (auto& [w, c] : raw) out.add(w, c);
    return out;
}

Q koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    const std::size_t n = perm.size();
    if (degrees.size() != n) throw ContractViolation("koszul_sign: permutation and degree lengths differ");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 1 || static_cast<std::size_t>(p) > n || seen[p - 1])
            throw ContractViolation("koszul_sign: not a permutation of 1..n");
        seen[p - 1] = true;
    }
    int parity = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) parity ^= (degrees[perm[i] - 1] * degrees[perm[j] - 1]) & 1;
    return parity ? Q(-1) : Q(1);
}

int sort_odd(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

Sparse word_product_commutative(const Word& a, const Word& b) {
    Word w;
    w.x = a.x;
    w.x.insert(w.x.end(), b.x.begin(), b.x.end());
    std::sort(w.x.begin(), w.x.end());
    // a.th a.dth b.th b.dth -> (a.th b.th)(a.dth b.dth)
    int sign = ((a.dth.size() * b.th.size()) & 1) ? -1 : 1;
    w.th = a.th;
    w.th.insert(w.th.end(), b.th.begin(), b.th.end());
    w.dth = a.dth;
    w.dth.insert(w.dth.end(), b.dth.begin(), b.dth.end());
    sign *= sort_odd(w.th);
    if (sign) sign *= sort_odd(w.dth);
    Sparse out;
    if (sign) out.add(w, sign);
    return out;
}

Sparse product_commutative(const Sparse& a, const Sparse& b) {
    Sparse out;
    for (auto& [wa, ca] : a)
        for (auto& [wb, cb] : b) out.add(word_product_commutative(wa, wb), ca * cb);
    return out;
}

int total_length(const Word& w) { return static_cast<int>(w.x.size() + w.th.size() + w.dth.size()); }

}  // namespace cebar
