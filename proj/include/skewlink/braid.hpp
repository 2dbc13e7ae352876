#pragma once

#include "free_group.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlink {

// Word in the braid group B_n on `strands` strings, generators s_1..s_{n-1}.
// Composition is left-to-right: word order = application order.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 1) throw std::invalid_argument("strand count must be positive");
    }
    BraidWord(int strands, std::vector<Letter> letters) : BraidWord(strands) {
        for (auto& l : letters) push(l);
    }

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    void push(Letter l) {
        if (l.gen < 1 || l.gen > strands_ - 1)
            throw std::invalid_argument("braid generator index out of range");
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
        letters_.push_back(l);
    }

    BraidWord& operator*=(const BraidWord& o) {
        if (strands_ != o.strands_) throw std::invalid_argument("strand count mismatch");
        for (auto& l : o.letters_) letters_.push_back(l);
        return *this;
    }
    friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

    BraidWord inverse() const {
        BraidWord r(strands_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            r.letters_.push_back({it->gen, -it->sign});
        return r;
    }

    // position i of the bottom end maps to permutation()[i-1] at the top
    std::vector<int> permutation() const {
        std::vector<int> pos(strands_);
        std::iota(pos.begin(), pos.end(), 1);  // pos[p] = strand occupying position p+1
        for (auto& l : letters_) std::swap(pos[l.gen - 1], pos[l.gen]);
        std::vector<int> end(strands_);
        for (int p = 0; p < strands_; ++p) end[pos[p] - 1] = p + 1;
        return end;
    }

    bool is_pure() const {
        auto p = permutation();
        for (int i = 0; i < strands_; ++i)
            if (p[i] != i + 1) return false;
        return true;
    }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands_ == b.strands_ && a.letters_ == b.letters_;
    }

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (auto& l : letters_) {
            if (!s.empty()) s += " ";
            s += "s" + std::to_string(l.gen);
            if (l.sign < 0) s += "^-1";
        }
        return s;
    }

private:
    int strands_ = 1;
    std::vector<Letter> letters_;
};

// Word in the pure braid group, as a product of powers of the generators
// A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}.
class PureBraidWord {
public:
    struct Factor {
        int i = 1, j = 2;  // 1 <= i < j <= strands
        int exp = 1;       // nonzero
    };

    PureBraidWord() = default;
    explicit PureBraidWord(int strands) : strands_(strands) {
        if (strands < 1) throw std::invalid_argument("strand count must be positive");
    }
    PureBraidWord(int strands, std::vector<Factor> factors) : PureBraidWord(strands) {
        for (auto& f : factors) push(f);
    }

    int strands() const { return strands_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    void push(Factor f) {
        if (f.i < 1 || f.i >= f.j || f.j > strands_)
            throw std::invalid_argument("pure braid generator indices out of range");
        if (f.exp == 0) throw std::invalid_argument("zero exponent factor");
        factors_.push_back(f);
    }

    PureBraidWord& operator*=(const PureBraidWord& o) {
        if (strands_ != o.strands_) throw std::invalid_argument("strand count mismatch");
        for (auto& f : o.factors_) factors_.push_back(f);
        return *this;
    }
    friend PureBraidWord operator*(PureBraidWord a, const PureBraidWord& b) { return a *= b; }

    PureBraidWord inverse() const {
        PureBraidWord r(strands_);
        for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
            r.factors_.push_back({it->i, it->j, -it->exp});
        return r;
    }

    BraidWord expand() const {
        BraidWord w(strands_);
        for (auto& f : factors_) {
            int s = f.exp > 0 ? 1 : -1;
            for (int rep = 0; rep < std::abs(f.exp); ++rep) {
                for (int k = f.j - 1; k > f.i; --k) w.push({k, 1});
                w.push({f.i, s});
                w.push({f.i, s});
                for (int k = f.i + 1; k <= f.j - 1; ++k) w.push({k, -1});
            }
        }
        return w;
    }

    // net exponent of A_{i,j} over the word, i < j
    int net_exponent(int i, int j) const {
        int e = 0;
        for (auto& f : factors_)
            if (f.i == i && f.j == j) e += f.exp;
        return e;
    }

    friend bool operator==(const PureBraidWord& a, const PureBraidWord& b) {
        if (a.strands_ != b.strands_ || a.factors_.size() != b.factors_.size()) return false;
        for (std::size_t k = 0; k < a.factors_.size(); ++k) {
            auto &x = a.factors_[k], &y = b.factors_[k];
            if (x.i != y.i || x.j != y.j || x.exp != y.exp) return false;
        }
        return true;
    }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (auto& f : factors_) {
            if (!s.empty()) s += " ";
            s += "A(" + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
            if (f.exp != 1) s += "^" + std::to_string(f.exp);
        }
        return s;
    }

private:
    int strands_ = 1;
    std::vector<Factor> factors_;
};

// Garside half-twist Delta_n = (s_{n-1}...s_1)(s_{n-1}...s_2)...(s_{n-1}).
inline BraidWord garside(int n) {
    if (n < 1) throw std::invalid_argument("strand count must be positive");
    BraidWord w(n);
    for (int start = 1; start < n; ++start)
        for (int i = n - 1; i >= start; --i) w.push({i, 1});
    return w;
}

// Artin action of a single generator; sign = -1 for the inverse letter.
inline FreeAutomorphism artin_generator(int strands, int i, int sign) {
    FreeAutomorphism id(strands);
    std::vector<FreeWord> im = id.images();
    FreeWord xi = FreeWord::generator(strands, i);
    FreeWord xj = FreeWord::generator(strands, i + 1);
    if (sign == 1) {
        im[i - 1] = xi * xj * xi.inverse();
        im[i] = xi;
    } else {
        im[i - 1] = xj;
        im[i] = xj.inverse() * xi * xj;
    }
    return FreeAutomorphism(strands, std::move(im));
}

// Artin action of a braid word (left-to-right composite) as an automorphism.
inline FreeAutomorphism artin_action(const BraidWord& b) {
    FreeAutomorphism phi(b.strands());
    for (auto& l : b.letters()) phi = phi.then(artin_generator(b.strands(), l.gen, l.sign));
    return phi;
}

inline FreeAutomorphism artin_action(const PureBraidWord& p) { return artin_action(p.expand()); }

// sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i, applied letter by letter.
inline FreeWord artin_act(const BraidWord& b, const FreeWord& w) {
    if (b.strands() != w.rank()) throw std::invalid_argument("strand count != word rank");
    FreeWord r = w;
    for (auto& l : b.letters()) r = artin_generator(b.strands(), l.gen, l.sign).apply(r);
    return r;
}

namespace detail {

inline void check_permutation(const std::vector<int>& perm) {
    int n = (int)perm.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("malformed permutation (duplicate or out-of-range entry)");
        seen[v] = true;
    }
}

// positions[v] = slot of the line with height v
inline std::vector<int> height_positions(const std::vector<int>& perm) {
    std::vector<int> pos(perm.size() + 1, 0);
    for (int idx = 0; idx < (int)perm.size(); ++idx) pos[perm[idx]] = idx + 1;
    return pos;
}

}  // namespace detail

// Half-braid of a horizontal arrangement. Pairs are indexed by heights:
// the (u,v) crossing is negative exactly when the lines at heights u < v sit
// in reversed slope order. This indexing reproduces the combed xi words the
// classification data is stated with, and the identity
// xi = Delta_{n-1} * (reduced alpha)^{-1} holds (see tests).
inline BraidWord half_braid(const std::vector<int>& perm) {
    detail::check_permutation(perm);
    const int m = (int)perm.size();
    auto pos = detail::height_positions(perm);
    BraidWord w(m);
    for (int j = m; j >= 2; --j)
        for (int i = j - 1; i >= 1; --i)
            w.push({m - j + i, pos[i] < pos[j] ? 1 : -1});
    return w;
}

// Combed pure braid xi = xi_2 ... xi_{n-1} with xi_j = prod_{i<j} A_{i,j}^{e_{i,j}},
// e_{i,j} = 1 iff the height-i line follows the height-j line in slope order.
// Lives on n-1 strands: the top line is dropped. If the top line is not in the
// last slot, the configuration is first rotated so that it is (a rigid isotopy).
inline PureBraidWord xi_braid(const std::vector<int>& perm) {
    detail::check_permutation(perm);
    std::vector<int> tau = perm;
    const int n = (int)tau.size();
    if (n >= 1 && tau[n - 1] != n) {
        int k = 0;
        while (tau[k] != n) ++k;
        std::rotate(tau.begin(), tau.begin() + k + 1, tau.end());
    }
    if (n <= 2) return PureBraidWord(std::max(1, n - 1));
    auto pos = detail::height_positions(tau);
    PureBraidWord xi(n - 1);
    for (int j = 2; j <= n - 1; ++j)
        for (int i = 1; i < j; ++i)
            if (pos[i] > pos[j]) xi.push({i, j, 1});
    return xi;
}

// full braid beta = alpha Delta_n alpha Delta_n^{-1}; its closure is the link
inline BraidWord full_braid(const std::vector<int>& perm) {
    BraidWord a = half_braid(perm);
    BraidWord d = garside((int)perm.size());
    return a * d * a * d.inverse();
}

}  // namespace skewlink
