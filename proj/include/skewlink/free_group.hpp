#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlink {

// One letter x_g^{sign} of a free-group word; gen is 1-based.
struct Letter {
    int gen = 1;
    int sign = 1;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
};

// Freely reduced word in F_rank. Reduction is maintained as an invariant,
// so equality of words is syntactic equality.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(int rank) : rank_(rank) {
        if (rank < 0) throw std::invalid_argument("negative rank");
    }
    FreeWord(int rank, std::vector<Letter> letters) : rank_(rank) {
        for (auto& l : letters) push(l);
    }

    static FreeWord generator(int rank, int i, int sign = 1) {
        FreeWord w(rank);
        w.push({i, sign});
        return w;
    }

    int rank() const { return rank_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    void push(Letter l) {
        if (l.gen < 1 || l.gen > rank_) throw std::invalid_argument("generator out of range");
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    FreeWord& operator*=(const FreeWord& o) {
        check(o);
        for (auto& l : o.letters_) push(l);
        return *this;
    }
    friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }

    FreeWord inverse() const {
        FreeWord r(rank_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            r.letters_.push_back({it->gen, -it->sign});
        return r;
    }

    // exponent-sum vector (abelianization)
    std::vector<int> abelianized() const {
        std::vector<int> v(rank_, 0);
        for (auto& l : letters_) v[l.gen - 1] += l.sign;
        return v;
    }

    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const {
        if (letters_.empty()) return "1";
        std::string s;
        for (auto& l : letters_) {
            if (!s.empty()) s += " ";
            s += var + std::to_string(l.gen);
            if (l.sign < 0) s += "^-1";
        }
        return s;
    }

private:
    void check(const FreeWord& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("word rank mismatch");
    }

    int rank_ = 0;
    std::vector<Letter> letters_;
};

// Endomorphism of F_rank given by generator images; the ones constructed
// here are automorphisms (Artin actions, basis changes).
class FreeAutomorphism {
public:
    FreeAutomorphism() = default;
    explicit FreeAutomorphism(int rank) : rank_(rank) {
        images_.reserve(rank);
        for (int i = 1; i <= rank; ++i) images_.push_back(FreeWord::generator(rank, i));
    }
    FreeAutomorphism(int rank, std::vector<FreeWord> images)
        : rank_(rank), images_(std::move(images)) {
        if ((int)images_.size() != rank) throw std::invalid_argument("image count mismatch");
        for (auto& w : images_)
            if (w.rank() != rank) throw std::invalid_argument("image rank mismatch");
    }

    int rank() const { return rank_; }
    const FreeWord& image(int i) const { return images_.at(i - 1); }
    const std::vector<FreeWord>& images() const { return images_; }

    FreeWord apply(const FreeWord& w) const {
        if (w.rank() != rank_) throw std::invalid_argument("word rank mismatch");
        FreeWord r(rank_);
        for (auto& l : w.letters()) {
            if (l.sign == 1)
                r *= images_[l.gen - 1];
            else
                r *= images_[l.gen - 1].inverse();
        }
        return r;
    }

    // apply *this first, then g
    FreeAutomorphism then(const FreeAutomorphism& g) const {
        if (rank_ != g.rank_) throw std::invalid_argument("rank mismatch");
        std::vector<FreeWord> im;
        im.reserve(rank_);
        for (auto& w : images_) im.push_back(g.apply(w));
        return FreeAutomorphism(rank_, std::move(im));
    }

    bool is_identity() const {
        for (int i = 1; i <= rank_; ++i)
            if (images_[i - 1] != FreeWord::generator(rank_, i)) return false;
        return true;
    }

    // integer matrix of the abelianized map; row i = abelianization of image(i)
    std::vector<std::vector<int>> abelianized_matrix() const {
        std::vector<std::vector<int>> m;
        m.reserve(rank_);
        for (auto& w : images_) m.push_back(w.abelianized());
        return m;
    }

    bool abelianized_is_identity() const {
        auto m = abelianized_matrix();
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (m[i][j] != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) {
        return a.rank_ == b.rank_ && a.images_ == b.images_;
    }

private:
    int rank_ = 0;
    std::vector<FreeWord> images_;
};

inline long long det_int(std::vector<std::vector<long long>> m) {
    // fraction-free Gaussian elimination (Bareiss)
    int n = (int)m.size();
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { s = i; break; }
            if (s < 0) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n ? sign * m[n - 1][n - 1] : 1;
}

inline long long abelianized_det(const FreeAutomorphism& a) {
    auto mi = a.abelianized_matrix();
    std::vector<std::vector<long long>> m(a.rank(), std::vector<long long>(a.rank()));
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) m[i][j] = mi[i][j];
    return det_int(std::move(m));
}

// Nielsen reduction of a candidate basis down to the standard generators,
// recording the elementary moves. Succeeds iff the words form a basis of the
// free group; the recorded moves give the inverse automorphism.
//
// Returns the inverse of the automorphism x_i -> words[i-1], or nullopt.
inline std::optional<FreeAutomorphism> invert_basis(const std::vector<FreeWord>& words) {
    const int n = (int)words.size();
    if (n == 0) return FreeAutomorphism(0);
    for (auto& w : words)
        if (w.rank() != n) return std::nullopt;

    // u: current tuple; t[i]: expression of u[i] as a word in the original
    // basis symbols (substituting z_k := words[k] recovers u[i])
    std::vector<FreeWord> u = words;
    std::vector<FreeWord> t;
    for (int i = 1; i <= n; ++i) t.push_back(FreeWord::generator(n, i));

    auto total = [&] {
        std::size_t s = 0;
        for (auto& w : u) s += w.length();
        return s;
    };

    std::size_t guard = 0;
    while (total() > (std::size_t)n) {
        if (++guard > 100000) return std::nullopt;
        bool improved = false;
        for (int i = 0; i < n && !improved; ++i) {
            if (u[i].empty()) return std::nullopt;  // not a basis
            for (int j = 0; j < n && !improved; ++j) {
                if (i == j) continue;
                const FreeWord cand_u[4] = {u[i] * u[j], u[i] * u[j].inverse(),
                                            u[j] * u[i], u[j].inverse() * u[i]};
                const FreeWord cand_t[4] = {t[i] * t[j], t[i] * t[j].inverse(),
                                            t[j] * t[i], t[j].inverse() * t[i]};
                for (int k = 0; k < 4; ++k) {
                    if (cand_u[k].length() < u[i].length()) {
                        u[i] = cand_u[k];
                        t[i] = cand_t[k];
                        improved = true;
                        break;
                    }
                }
            }
        }
        if (!improved) return std::nullopt;  // stalled above total length n
    }

    // each u[i] is now a single letter; assemble the inverse images
    std::vector<FreeWord> inv(n, FreeWord(n));
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < n; ++i) {
        if (u[i].length() != 1) return std::nullopt;
        Letter l = u[i].letters()[0];
        if (seen[l.gen]) return std::nullopt;
        seen[l.gen] = true;
        inv[l.gen - 1] = (l.sign == 1) ? t[i] : t[i].inverse();
    }
    return FreeAutomorphism(n, std::move(inv));
}

// Conjugate `aut` by the basis y_i = basis[i-1]: returns the automorphism
// expressing images of the y_i in y-letters. Verifies the basis first
// (unimodular abelianization + Nielsen reduction to the standard generators).
inline FreeAutomorphism change_basis(const FreeAutomorphism& aut,
                                     const std::vector<FreeWord>& basis) {
    const int n = aut.rank();
    if ((int)basis.size() != n) throw std::invalid_argument("basis size mismatch");
    FreeAutomorphism b(n, basis);
    long long d = abelianized_det(b);
    if (d != 1 && d != -1)
        throw std::invalid_argument("basis is not unimodular on homology");
    auto binv = invert_basis(basis);
    if (!binv) throw std::invalid_argument("words do not form a free-group basis");
    return b.then(aut).then(*binv);
}

}  // namespace skewlink
