#pragma once

#include "laurent.hpp"

#include <vector>

namespace skewlink {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Element of Z[zeta_p], p prime, stored as sum c_a zeta^a for a = 0..p-1.
// Since 1 + zeta + ... + zeta^{p-1} = 0 is the only integer relation for
// prime p, the value is zero iff all coordinates are equal.
class CyclotomicValue {
public:
    CyclotomicValue() = default;
    explicit CyclotomicValue(int p) : p_(p), c_(p, 0) {
        if (!is_prime(p)) throw std::invalid_argument("cyclotomic order must be prime");
    }
    static CyclotomicValue integer(int p, Int v) {
        CyclotomicValue x(p);
        x.c_[0] = std::move(v);
        return x;
    }
    static CyclotomicValue root_power(int p, int a, Int coeff = 1) {
        CyclotomicValue x(p);
        x.c_[((a % p) + p) % p] = std::move(coeff);
        return x;
    }

    int order() const { return p_; }
    const std::vector<Int>& coords() const { return c_; }

    bool is_zero() const {
        for (int a = 1; a < p_; ++a)
            if (c_[a] != c_[0]) return false;
        return true;
    }

    CyclotomicValue& operator+=(const CyclotomicValue& o) {
        check(o);
        for (int a = 0; a < p_; ++a) c_[a] += o.c_[a];
        return *this;
    }
    CyclotomicValue& operator-=(const CyclotomicValue& o) {
        check(o);
        for (int a = 0; a < p_; ++a) c_[a] -= o.c_[a];
        return *this;
    }
    friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
    friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
    friend CyclotomicValue operator-(const CyclotomicValue& a) {
        CyclotomicValue r(a.p_);
        for (int i = 0; i < a.p_; ++i) r.c_[i] = -a.c_[i];
        return r;
    }

    friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
        a.check(b);
        CyclotomicValue r(a.p_);
        for (int i = 0; i < a.p_; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < a.p_; ++j) {
                if (b.c_[j] == 0) continue;
                int k = i + j;
                if (k >= a.p_) k -= a.p_;
                r.c_[k] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    CyclotomicValue& operator*=(const CyclotomicValue& o) { return *this = *this * o; }

    // equality as ring elements (difference is zero)
    friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
        a.check(b);
        return (a - b).is_zero();
    }

private:
    void check(const CyclotomicValue& o) const {
        if (p_ != o.p_) throw std::invalid_argument("cyclotomic order mismatch");
    }

    int p_ = 2;
    std::vector<Int> c_ = {0, 0};
};

// Evaluate a Laurent polynomial at t_i = zeta^{point[i]}; exact.
inline CyclotomicValue eval_torsion(const LaurentPoly& poly, int p, const std::vector<int>& point) {
    if (!is_prime(p)) throw std::invalid_argument("torsion order must be prime");
    if ((int)point.size() != poly.nvars()) throw std::invalid_argument("point arity mismatch");
    for (int a : point)
        if (a < 0 || a >= p) throw std::invalid_argument("residue out of range");
    CyclotomicValue r(p);
    for (auto& [e, c] : poly.terms()) {
        long long dot = 0;
        for (int i = 0; i < poly.nvars(); ++i) dot += (long long)e[i] * point[i];
        int b = (int)(((dot % p) + p) % p);
        r += CyclotomicValue::root_power(p, b, c);
    }
    return r;
}

}  // namespace skewlink
