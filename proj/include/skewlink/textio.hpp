#pragma once

#include "arrangement.hpp"
#include "subtorus.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

namespace skewlink {

// Parse failure with the offending position, surfaced by the CLI as exit 2.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    void skip_ws() {
        while (!done() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    bool eat_word(const std::string& w) {
        if (s.compare(i, w.size(), w) == 0) {
            i += w.size();
            return true;
        }
        return false;
    }
    long parse_int() {
        skip_ws();
        std::size_t start = i;
        bool neg = eat('-');
        if (!neg) eat('+');
        if (done() || !std::isdigit((unsigned char)peek()))
            throw ParseError("expected an integer", start);
        long v = 0;
        while (!done() && std::isdigit((unsigned char)peek())) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    }
};

}  // namespace detail

// "21435" (single digits) or "3,4,1,2,5,6"
inline std::vector<int> parse_permutation(const std::string& text) {
    std::vector<int> perm;
    if (text.find(',') != std::string::npos) {
        detail::Cursor c{text};
        for (;;) {
            perm.push_back((int)c.parse_int());
            c.skip_ws();
            if (!c.eat(',')) break;
        }
        c.skip_ws();
        if (!c.done()) throw ParseError("trailing input after permutation", c.i);
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char ch = text[i];
            if (std::isspace((unsigned char)ch)) continue;
            if (!std::isdigit((unsigned char)ch) || ch == '0')
                throw ParseError("permutation digit expected", i);
            perm.push_back(ch - '0');
        }
    }
    if (perm.empty()) throw ParseError("empty permutation", 0);
    check_permutation(perm);
    return perm;
}

// "s3 s2 s1 s3 s2 s3^-1", whitespace-separated; strand count given separately
inline BraidWord parse_braid_word(const std::string& text, int strands) {
    BraidWord w(strands);
    detail::Cursor c{text};
    c.skip_ws();
    if (c.eat('1')) {
        c.skip_ws();
        if (c.done()) return w;
        throw ParseError("trailing input after identity word", c.i);
    }
    while (!c.done()) {
        if (!c.eat('s')) throw ParseError("expected braid letter 's<i>'", c.i);
        int gen = (int)c.parse_int();
        int sign = 1;
        if (c.eat('^')) {
            long e = c.parse_int();
            if (e != 1 && e != -1) throw ParseError("braid letter exponent must be +-1", c.i);
            sign = (int)e;
        }
        w.push({gen, sign});
        c.skip_ws();
    }
    return w;
}

// "A(1,3) A(2,3) A(4,5)^-1", whitespace optional between factors
inline PureBraidWord parse_pure_word(const std::string& text, int strands) {
    PureBraidWord w(strands);
    detail::Cursor c{text};
    c.skip_ws();
    if (c.eat('1')) {
        c.skip_ws();
        if (c.done()) return w;
        throw ParseError("trailing input after identity word", c.i);
    }
    while (!c.done()) {
        if (!c.eat('A')) throw ParseError("expected pure-braid factor 'A(i,j)'", c.i);
        c.expect('(');
        int i = (int)c.parse_int();
        c.skip_ws();
        c.expect(',');
        int j = (int)c.parse_int();
        c.skip_ws();
        c.expect(')');
        int e = 1;
        if (c.eat('^')) e = (int)c.parse_int();
        if (e == 0) throw ParseError("zero exponent", c.i);
        w.push({i, j, e});
        c.skip_ws();
    }
    return w;
}

// spec grammar: perm:341256 | perm:3,4,1,2,5,6 | xi:n=6;A(2,4)A(1,2) | cat:K |
// cable(<spec>,k=6,sign=+,r=2)
inline ArrangementSpec parse_spec(const std::string& text) {
    std::string t = text;
    // trim
    while (!t.empty() && std::isspace((unsigned char)t.front())) t.erase(t.begin());
    while (!t.empty() && std::isspace((unsigned char)t.back())) t.pop_back();
    if (t.rfind("perm:", 0) == 0) {
        return ArrangementSpec::horizontal(parse_permutation(t.substr(5)));
    }
    if (t.rfind("xi:", 0) == 0) {
        detail::Cursor c{t};
        c.i = 3;
        c.skip_ws();
        if (!c.eat_word("n=")) throw ParseError("expected 'n=<planes>'", c.i);
        int n = (int)c.parse_int();
        if (n < 2) throw ParseError("xi spec needs n >= 2", c.i);
        c.skip_ws();
        c.expect(';');
        return ArrangementSpec::xi_word(parse_pure_word(t.substr(c.i), n - 1), n);
    }
    if (t.rfind("cat:", 0) == 0) {
        return catalog(t.substr(4));
    }
    if (t.rfind("cable(", 0) == 0) {
        if (t.back() != ')') throw ParseError("unterminated cable spec", t.size());
        std::string inner = t.substr(6, t.size() - 7);
        // split at the top-level comma before "k="
        int depth = 0;
        std::size_t cut = std::string::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0) {
                cut = i;
                break;
            }
        }
        if (cut == std::string::npos) throw ParseError("cable spec needs parameters", 6);
        ArrangementSpec base = parse_spec(inner.substr(0, cut));
        int k = 0, sign = 1, r = 1;
        bool have_k = false;
        detail::Cursor c{inner};
        c.i = cut;
        while (c.eat(',')) {
            c.skip_ws();
            if (c.eat_word("k=")) {
                k = (int)c.parse_int();
                have_k = true;
            } else if (c.eat_word("sign=")) {
                if (c.eat('+')) sign = 1;
                else if (c.eat('-')) sign = -1;
                else throw ParseError("sign must be + or -", c.i);
            } else if (c.eat_word("r=")) {
                r = (int)c.parse_int();
            } else {
                throw ParseError("unknown cable parameter", c.i);
            }
            c.skip_ws();
        }
        if (!c.done()) throw ParseError("trailing input in cable spec", c.i);
        if (!have_k) k = 0;  // defaults to the last component
        return ArrangementSpec::cable(std::move(base), k, sign, r);
    }
    throw ParseError("spec must start with perm:, xi:, cat: or cable(", 0);
}

// subtorus grammar: "t4=1 & t2=-1" or "t6=t4^2*t3^-2"; each equation is moved
// to the form t^a = +-1
inline Subtorus parse_subtorus(const std::string& text, int nvars) {
    Subtorus torus(nvars);
    detail::Cursor c{text};
    auto parse_monomial = [&](Exps& exps, int& sign) {
        // [-]1 | t<i>[^e] (* t<j>[^e])* ; contributes to exps/sign
        c.skip_ws();
        if (c.peek() == '-' || std::isdigit((unsigned char)c.peek())) {
            long v = c.parse_int();
            if (v == -1) sign = -sign;
            else if (v != 1)
                throw ParseError("only unit constants appear in subtorus equations", c.i);
            return;
        }
        for (;;) {
            if (!c.eat('t')) throw ParseError("expected variable 't<i>'", c.i);
            int var = (int)c.parse_int();
            if (var < 1 || var > nvars) throw ParseError("variable index out of range", c.i);
            int e = 1;
            if (c.eat('^')) e = (int)c.parse_int();
            exps[var - 1] += e;
            c.skip_ws();
            if (!c.eat('*')) break;
            c.skip_ws();
        }
    };
    for (;;) {
        Exps lhs(nvars, 0), rhs(nvars, 0);
        int sign = 1;
        parse_monomial(lhs, sign);
        c.skip_ws();
        c.expect('=');
        int rsign = 1;
        parse_monomial(rhs, rsign);
        // t^lhs = rsign/sign * t^rhs  ->  t^(lhs-rhs) = sign*rsign
        Exps a(nvars);
        for (int i = 0; i < nvars; ++i) a[i] = lhs[i] - rhs[i];
        torus.add_equation(std::move(a), sign * rsign);
        c.skip_ws();
        if (!c.eat('&')) break;
        c.skip_ws();
    }
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing input after subtorus equations", c.i);
    return torus;
}

// basis file: one free word per line, letters "x<i>" or "x<i>^-1"; blank lines
// and lines starting with '#' are skipped
inline std::vector<FreeWord> parse_basis_lines(const std::string& text, int rank) {
    std::vector<FreeWord> words;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace((unsigned char)ch)) blank = false;
        if (blank) continue;
        FreeWord w(rank);
        detail::Cursor c{line};
        c.skip_ws();
        if (c.peek() == '1') {
            throw ParseError("a basis word cannot be the identity", c.i);
        }
        while (!c.done()) {
            if (!c.eat('x')) throw ParseError("expected letter 'x<i>'", c.i);
            int gen = (int)c.parse_int();
            int sign = 1;
            if (c.eat('^')) {
                long e = c.parse_int();
                if (e != 1 && e != -1) throw ParseError("letter exponent must be +-1", c.i);
                sign = (int)e;
            }
            w.push({gen, sign});
            c.skip_ws();
        }
        words.push_back(std::move(w));
    }
    if ((int)words.size() != rank)
        throw ParseError("basis needs exactly " + std::to_string(rank) + " words", 0);
    return words;
}

}  // namespace skewlink
