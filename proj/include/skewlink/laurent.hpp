#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlink {

using Int = boost::multiprecision::cpp_int;
using Exps = std::vector<int>;

// Substitution of each input variable by a signed Laurent monomial in the
// output variables. A ring homomorphism; invertible when square and the
// exponent matrix is unimodular.
struct MonomialSubstitution {
    struct Image {
        int sign = 1;  // +1 or -1
        Exps exps;     // length nvars_out
    };

    int nvars_in = 0;
    int nvars_out = 0;
    std::vector<Image> images;  // one per input variable

    static MonomialSubstitution identity(int n) {
        MonomialSubstitution s;
        s.nvars_in = s.nvars_out = n;
        s.images.resize(n);
        for (int i = 0; i < n; ++i) {
            s.images[i].sign = 1;
            s.images[i].exps.assign(n, 0);
            s.images[i].exps[i] = 1;
        }
        return s;
    }

    bool sign_free() const {
        for (auto& im : images)
            if (im.sign < 0) return false;
        return true;
    }
};

// Multivariate Laurent polynomial over arbitrary-precision integers.
// Terms are kept in a lexicographically ordered map; no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }

    static LaurentPoly constant(int nvars, Int c) {
        LaurentPoly p(nvars);
        if (c != 0) p.terms_[Exps(nvars, 0)] = std::move(c);
        return p;
    }

    // var is 1-based
    static LaurentPoly monomial(int nvars, int var, int exp = 1, Int coeff = 1) {
        if (var < 1 || var > nvars) throw std::invalid_argument("variable index out of range");
        LaurentPoly p(nvars);
        if (coeff != 0) {
            Exps e(nvars, 0);
            e[var - 1] = exp;
            p.terms_[std::move(e)] = std::move(coeff);
        }
        return p;
    }

    static LaurentPoly term(int nvars, Exps exps, Int coeff) {
        LaurentPoly p(nvars);
        if ((int)exps.size() != nvars) throw std::invalid_argument("exponent arity mismatch");
        if (coeff != 0) p.terms_[std::move(exps)] = std::move(coeff);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exps, Int>& terms() const { return terms_; }

    Int coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Exps& e, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_arity(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_arity(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.nvars_);
        for (auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_arity(b);
        LaurentPoly r(a.nvars_);
        Exps key(a.nvars_);
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) key[i] = ea[i] + eb[i];
                r.add_term(key, ca * cb);
            }
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power of a polynomial");
        LaurentPoly r = constant(nvars_, 1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // image under a monomial substitution; arity checked
    LaurentPoly substituted(const MonomialSubstitution& sub) const {
        if (sub.nvars_in != nvars_) throw std::invalid_argument("substitution arity mismatch");
        LaurentPoly r(sub.nvars_out);
        Exps key(sub.nvars_out);
        for (auto& [e, c] : terms_) {
            std::fill(key.begin(), key.end(), 0);
            int sgn = 1;
            for (int i = 0; i < nvars_; ++i) {
                int ei = e[i];
                if (ei == 0) continue;
                const auto& im = sub.images[i];
                if (im.sign < 0 && (ei % 2) != 0) sgn = -sgn;
                for (int t = 0; t < sub.nvars_out; ++t) key[t] += ei * im.exps[t];
            }
            r.add_term(key, sgn < 0 ? Int(-c) : c);
        }
        return r;
    }

    // Divide by the greatest common monomial so every variable's minimal
    // exponent is 0, then flip the sign so the lexicographically smallest
    // exponent vector has a positive coefficient. Idempotent.
    LaurentPoly normalized_unit() const {
        if (terms_.empty()) throw std::domain_error("cannot unit-normalize the zero polynomial");
        Exps mins = terms_.begin()->first;
        for (auto& [e, c] : terms_)
            for (int i = 0; i < nvars_; ++i) mins[i] = std::min(mins[i], e[i]);
        LaurentPoly r(nvars_);
        for (auto& [e, c] : terms_) {
            Exps k(nvars_);
            for (int i = 0; i < nvars_; ++i) k[i] = e[i] - mins[i];
            r.terms_.emplace(std::move(k), c);
        }
        if (r.terms_.begin()->second < 0)
            for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    bool equal_up_to_unit(const LaurentPoly& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return normalized_unit() == o.normalized_unit();
    }

    // exact evaluation at integer points (enough for delta at t = -1)
    Int eval_int(const std::vector<Int>& xs) const {
        if ((int)xs.size() != nvars_) throw std::invalid_argument("evaluation arity mismatch");
        Int total = 0;
        for (auto& [e, c] : terms_) {
            Int m = c;
            for (int i = 0; i < nvars_; ++i) {
                int ei = e[i];
                if (ei < 0) {
                    if (xs[i] != 1 && xs[i] != -1)
                        throw std::domain_error("negative exponent at non-unit argument");
                }
                int a = std::abs(ei);
                for (int k = 0; k < a; ++k) m *= xs[i];
            }
            total += m;
        }
        return total;
    }

    // canonical text: terms in lex order of exponent vectors
    std::string str(const std::string& var = "t") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool any = false;
            std::ostringstream mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (any) mono << "*";
                mono << var << (i + 1);
                if (e[i] != 1) mono << "^" << e[i];
                any = true;
            }
            if (!any) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << mono.str();
            }
        }
        return os.str();
    }

private:
    void check_arity(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    }

    int nvars_ = 0;
    std::map<Exps, Int> terms_;
};

// Exact division by t^m - 1, where some coordinate of m is +1 or -1.
// Divisibility is prechecked by projecting to the quotient ring Z[t^{\pm}]/(t^m-1)
// along the pivot coordinate, so inexact inputs fail fast.
inline LaurentPoly divide_by_binomial_minus_one(const LaurentPoly& f, const Exps& m) {
    const int n = f.nvars();
    if ((int)m.size() != n) throw std::invalid_argument("divisor arity mismatch");
    int pivot = -1;
    for (int i = 0; i < n; ++i)
        if (m[i] == 1 || m[i] == -1) { pivot = i; break; }
    if (pivot < 0) throw std::invalid_argument("binomial divisor needs a unit exponent");
    if (f.is_zero()) return LaurentPoly(n);

    // residue of an exponent vector modulo the lattice line Z*m
    auto residue = [&](const Exps& e) {
        int q = e[pivot] * m[pivot];  // e - q*m zeroes the pivot coordinate
        Exps r(n);
        for (int i = 0; i < n; ++i) r[i] = e[i] - q * m[i];
        return r;
    };
    std::map<Exps, Int> classes;
    for (auto& [e, c] : f.terms()) {
        auto r = residue(e);
        auto it = classes.find(r);
        if (it == classes.end()) classes.emplace(std::move(r), c);
        else {
            it->second += c;
            if (it->second == 0) classes.erase(it);
        }
    }
    if (!classes.empty()) throw std::domain_error("division by t^m - 1 is not exact");

    // exact long division along the pivot direction, per residue class
    std::map<Exps, std::map<int, Int>> fibers;  // residue -> pivot multiple q -> coeff
    for (auto& [e, c] : f.terms()) {
        int q = e[pivot] * m[pivot];
        fibers[residue(e)][q] = c;
    }
    LaurentPoly out(n);
    for (auto& [r, fiber] : fibers) {
        // f_fiber = sum c_q t^{r + q m}; divide sum c_q u^q by (u - 1) exactly
        // quotient coefficient at power q: sum_{q' > q} c_{q'}
        Int run = 0;
        for (auto it = fiber.rbegin(); it != fiber.rend();) {
            int q = it->first;
            run += it->second;
            ++it;
            int next_q = (it == fiber.rend()) ? q - 1 : it->first;
            if (run != 0) {
                for (int qq = q - 1; qq >= next_q; --qq) {
                    Exps e(n);
                    for (int i = 0; i < n; ++i) e[i] = r[i] + qq * m[i];
                    out.add_term(e, run);
                }
            }
        }
    }
    return out;
}

}  // namespace skewlink
