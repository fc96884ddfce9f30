#include "cebar/expr.hpp"

#include <algorithm>
#include <cctype>

namespace cebar {

std::string render_word(const Word& w, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < w.x.size();) {
        std::size_t j = i;
        while (j < w.x.size() && w.x[j] == w.x[i]) ++j;
        if (!out.empty()) out += '*';
        out += names.at(w.x[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    auto odd = [&](const char* tag, const std::vector<int>& v) {
        if (v.empty()) return;
        if (!out.empty()) out += ' ';
        out += tag;
        out += '[';
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
        out += ']';
    };
    odd("th", w.th);
    odd("dth", w.dth);
    return out;
}

std::string render(const Sparse& e, const std::vector<std::string>& names) {
    if (e.zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [w, c] : e) {
        Q a = abs(c);
        std::string mono = render_word(w, names);
        std::string body;
        if (mono.empty()) body = to_string(a);
        else if (a == 1) body = mono;
        else body = to_string(a) + "*" + mono;
        if (first) out += (c < 0 ? "-" : "") + body;
        else out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string render(const Sparse& e, const LieAlgebra& g) { return render(e, g.basis()); }

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

    Sparse run() {
        Sparse e = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected character '" + std::string(1, s_[p_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& m) { throw ParseError(m, p_); }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool peek(char c) {
        skip();
        return p_ < s_.size() && s_[p_] == c;
    }
    bool starts_factor() {
        skip();
        if (p_ >= s_.size()) return false;
        char c = s_[p_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool starts_number() {
        skip();
        return p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]));
    }

    Sparse expr() {
        Sparse out;
        Q sign = 1;
        if (peek('+')) ++p_;
        else if (peek('-')) { ++p_; sign = -1; }
        out.add(term(), sign);
        while (true) {
            if (peek('+')) { ++p_; out.add(term(), 1); }
            else if (peek('-')) { ++p_; out.add(term(), -1); }
            else break;
        }
        return out;
    }

    Q number() {
        std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ < s_.size() && s_[p_] == '/') {
            ++p_;
            std::size_t d = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (d == p_) { p_ = d; fail("malformed rational"); }
        }
        try {
            return parse_rational(s_.substr(start, p_ - start));
        } catch (const std::invalid_argument& e) {
            p_ = start;
            fail(e.what());
        }
    }

    Sparse term() {
        Sparse out(Word{});
        bool any = false;
        if (starts_number()) {
            out *= number();
            any = true;
            if (peek('*')) {
                ++p_;
                if (!starts_factor()) fail("expected factor");
            }
        }
        while (starts_factor()) {
            out = product_commutative(out, factor());
            any = true;
            if (peek('*')) {
                ++p_;
                if (!starts_factor()) fail("expected factor");
            }
        }
        if (!any) fail("expected term");
        return out;
    }

    std::vector<int> index_list() {
        std::vector<int> v;
        skip();
        if (!peek('[')) fail("expected '['");
        ++p_;
        while (true) {
            skip();
            std::size_t start = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (start == p_) fail("expected index");
            int i = std::stoi(s_.substr(start, p_ - start));
            if (i < 1 || i > static_cast<int>(names_.size())) { p_ = start; fail("index out of range"); }
            if (std::find(v.begin(), v.end(), i - 1) != v.end()) { p_ = start; fail("repeated odd index"); }
            v.push_back(i - 1);
            skip();
            if (peek(',')) { ++p_; continue; }
            if (peek(']')) { ++p_; break; }
            fail("expected ',' or ']'");
        }
        return v;
    }

    Sparse factor() {
        skip();
        if (peek('(')) {
            ++p_;
            Sparse e = expr();
            if (!peek(')')) fail("expected ')'");
            ++p_;
            return e;
        }
        std::size_t start = p_;
        while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
        std::string id = s_.substr(start, p_ - start);
        if ((id == "th" || id == "dth") && peek('[')) {
            auto v = index_list();
            int sgn = sort_odd(v);
            Word w = id == "th" ? thw(v) : dthw(v);
            return Sparse(w, sgn);
        }
        auto it = std::find(names_.begin(), names_.end(), id);
        if (it == names_.end()) { p_ = start; fail("unknown name '" + id + "'"); }
        int idx = static_cast<int>(it - names_.begin());
        long power = 1;
        if (peek('^')) {
            ++p_;
            skip();
            std::size_t d = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (d == p_) fail("expected exponent");
            power = std::stol(s_.substr(d, p_ - d));
        }
        return Sparse(xw(std::vector<int>(power, idx)));
    }

    const std::string& s_;
    const std::vector<std::string>& names_;
    std::size_t p_ = 0;
};

}  // namespace

Sparse parse_expression(const std::string& src, const std::vector<std::string>& names) {
    return Parser(src, names).run();
}

Sparse parse_expression(const std::string& src, const LieAlgebra& g) { return parse_expression(src, g.basis()); }

}  // namespace cebar
