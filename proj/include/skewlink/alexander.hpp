#pragma once

#include "braid.hpp"
#include "fox.hpp"

#include <map>
#include <optional>

namespace skewlink {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline LaurentPoly extend_vars(const LaurentPoly& p, int new_nvars) {
    if (new_nvars < p.nvars()) throw std::invalid_argument("cannot drop variables");
    MonomialSubstitution s;
    s.nvars_in = p.nvars();
    s.nvars_out = new_nvars;
    s.images.resize(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) {
        s.images[i].sign = 1;
        s.images[i].exps.assign(new_nvars, 0);
        s.images[i].exps[i] = 1;
    }
    return p.substituted(s);
}

inline PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    int nv = 0;
    for (auto& row : a)
        for (auto& e : row) nv = e.nvars();
    PolyMatrix r(n, std::vector<LaurentPoly>(m, LaurentPoly(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

// Determinant by dynamic programming over column subsets (division-free).
inline LaurentPoly poly_det(const PolyMatrix& mat) {
    const int n = (int)mat.size();
    int nv = -1;
    for (auto& row : mat)
        for (auto& e : row)
            if (nv < 0 || !e.is_zero()) nv = e.nvars();
    if (n == 0) return LaurentPoly::constant(std::max(nv, 0), 1);
    if (nv < 0) nv = 0;
    std::map<std::uint64_t, LaurentPoly> cur;
    cur.emplace(0, LaurentPoly::constant(nv, 1));
    for (int r = 0; r < n; ++r) {
        std::map<std::uint64_t, LaurentPoly> nxt;
        for (auto& [used, val] : cur) {
            if (val.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                if (used & (1ull << c)) continue;
                if (mat[r][c].is_zero()) continue;
                int less = 0;
                for (int u = 0; u < c; ++u)
                    if (used & (1ull << u)) ++less;
                LaurentPoly piece = val * mat[r][c];
                if ((r - less) % 2 != 0) piece = -piece;
                auto key = used | (1ull << c);
                auto it = nxt.find(key);
                if (it == nxt.end()) nxt.emplace(key, std::move(piece));
                else it->second += piece;
            }
        }
        cur = std::move(nxt);
    }
    auto it = cur.find((n >= 64) ? ~0ull : ((1ull << n) - 1));
    return it == cur.end() ? LaurentPoly(nv) : it->second;
}

// Gassner matrix of a pure braid: entry (i,j) is the abelianized Fox
// derivative d(xi(x_i))/dx_j, in the strand variables t_1..t_size.
struct GassnerMatrix {
    int size = 0;  // strand count
    PolyMatrix entries;

    static GassnerMatrix identity(int size) {
        GassnerMatrix g;
        g.size = size;
        g.entries.assign(size, std::vector<LaurentPoly>(size, LaurentPoly(size)));
        for (int i = 0; i < size; ++i) g.entries[i][i] = LaurentPoly::constant(size, 1);
        return g;
    }

    GassnerMatrix operator*(const GassnerMatrix& o) const {
        if (size != o.size) throw std::invalid_argument("size mismatch");
        GassnerMatrix r;
        r.size = size;
        r.entries = poly_mat_mul(entries, o.entries);
        return r;
    }

    bool operator==(const GassnerMatrix& o) const {
        return size == o.size && entries == o.entries;
    }

    // evaluation at t_i = 1 for all i (must be the identity for pure braids)
    std::vector<std::vector<Int>> at_ones() const {
        std::vector<std::vector<Int>> m(size, std::vector<Int>(size, 0));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                for (auto& [e, c] : entries[i][j].terms()) m[i][j] += c;
        return m;
    }

    LaurentPoly det() const { return poly_det(entries); }

    bool det_is_unit_monomial() const {
        auto d = det();
        if (d.term_count() != 1) return false;
        auto& c = d.terms().begin()->second;
        return c == 1 || c == -1;
    }
};

inline GassnerMatrix gassner_of_automorphism(const FreeAutomorphism& phi) {
    const int n = phi.rank();
    GassnerMatrix g;
    g.size = n;
    g.entries.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) g.entries[i - 1][j - 1] = fox_derivative_ab(phi.image(i), j);
    return g;
}

// Gassner representation of a pure braid, optionally after a change of basis
// of the underlying free group.
inline GassnerMatrix gassner(const PureBraidWord& xi,
                             const std::optional<std::vector<FreeWord>>& basis = std::nullopt) {
    FreeAutomorphism phi = artin_action(xi);
    if (!phi.abelianized_is_identity())
        throw std::invalid_argument("braid is not pure (abelianized action is nontrivial)");
    if (basis) phi = change_basis(phi, *basis);
    return gassner_of_automorphism(phi);
}

// Alexander matrix M = ( t_n*id - Theta(xi^2) | d_1 ) with d_1 = (1-t_i)^T,
// (n-1) x n over t_1..t_n, where xi braids on n-1 strands.
struct AlexMatrix {
    int rows = 0;
    int cols = 0;
    PolyMatrix entries;       // polys in `cols` variables
    std::string basis_tag;    // "x" or a description of the basis

    // M * (t_1-1, ..., t_n-1)^T, for the fundamental row identity
    std::vector<LaurentPoly> times_d() const {
        std::vector<LaurentPoly> out(rows, LaurentPoly(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                LaurentPoly tj_minus_1 =
                    LaurentPoly::monomial(cols, j + 1) - LaurentPoly::constant(cols, 1);
                out[i] += entries[i][j] * tj_minus_1;
            }
        return out;
    }
};

inline AlexMatrix alexander_matrix_of(const GassnerMatrix& theta_xi, const std::string& tag) {
    const int s = theta_xi.size;  // n-1 strands
    const int n = s + 1;
    GassnerMatrix sq = theta_xi * theta_xi;
    AlexMatrix M;
    M.rows = s;
    M.cols = n;
    M.basis_tag = tag;
    M.entries.assign(s, std::vector<LaurentPoly>(n, LaurentPoly(n)));
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            LaurentPoly e = -extend_vars(sq.entries[i][j], n);
            if (i == j) e += LaurentPoly::monomial(n, n);
            M.entries[i][j] = std::move(e);
        }
        M.entries[i][s] =
            LaurentPoly::constant(n, 1) - LaurentPoly::monomial(n, i + 1);  // 1 - t_i
    }
    return M;
}

inline AlexMatrix alexander_matrix_from_xi(
    const PureBraidWord& xi,
    const std::optional<std::vector<FreeWord>>& basis = std::nullopt) {
    return alexander_matrix_of(gassner(xi, basis), basis ? "y" : "x");
}

// All (n-k) x (n-k) minors of M, unevaluated. E_n is the unit ideal {1}.
inline std::vector<LaurentPoly> ek_minors(const AlexMatrix& M, int k) {
    const int n = M.cols;
    if (k < 1 || k > n) throw std::invalid_argument("ideal index out of range");
    const int m = n - k;
    if (m == 0) return {LaurentPoly::constant(n, 1)};
    std::vector<LaurentPoly> out;
    std::vector<int> rsel(m), csel(m);
    std::function<void(int, int)> pick_cols = [&](int cstart, int cdepth) {
        if (cdepth == m) {
            PolyMatrix sub(m, std::vector<LaurentPoly>(m, LaurentPoly(n)));
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) sub[a][b] = M.entries[rsel[a]][csel[b]];
            out.push_back(poly_det(sub));
            return;
        }
        for (int c = cstart; c <= n - (m - cdepth); ++c) {
            csel[cdepth] = c;
            pick_cols(c + 1, cdepth + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int rstart, int rdepth) {
        if (rdepth == m) {
            pick_cols(0, 0);
            return;
        }
        for (int r = rstart; r <= M.rows - (m - rdepth); ++r) {
            rsel[rdepth] = r;
            pick_rows(r + 1, rdepth + 1);
        }
    };
    pick_rows(0, 0);
    return out;
}

// Delta_A = det(t_n*id - Theta(xi^2)) / (t_n - 1), n >= 2; exact division.
inline LaurentPoly alexander_poly_from_xi(
    const PureBraidWord& xi, int n,
    const std::optional<std::vector<FreeWord>>& basis = std::nullopt) {
    if (n < 2) throw std::invalid_argument("alexander polynomial needs n >= 2");
    if (xi.strands() != n - 1) throw std::invalid_argument("xi must braid on n-1 strands");
    AlexMatrix M = alexander_matrix_from_xi(xi, basis);
    PolyMatrix sq(M.rows, std::vector<LaurentPoly>(M.rows, LaurentPoly(n)));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.rows; ++j) sq[i][j] = M.entries[i][j];
    LaurentPoly d = poly_det(sq);
    Exps en(n, 0);
    en[n - 1] = 1;
    return divide_by_binomial_minus_one(d, en);
}

// coordinate change from the xi presentation to link meridians:
// t_i -> t_i (i < n), t_n -> t_1...t_n
inline MonomialSubstitution meridian_substitution(int n) {
    MonomialSubstitution s = MonomialSubstitution::identity(n);
    s.images[n - 1].exps.assign(n, 1);
    return s;
}

inline LaurentPoly link_poly_from_alexander(const LaurentPoly& delta_x) {
    return delta_x.substituted(meridian_substitution(delta_x.nvars()));
}

// Delta_A(t) = (t-1) * Delta_L(t,...,t), one variable.
inline LaurentPoly single_var_from_link_poly(const LaurentPoly& link) {
    const int n = link.nvars();
    MonomialSubstitution diag;
    diag.nvars_in = n;
    diag.nvars_out = 1;
    diag.images.assign(n, {1, {1}});
    LaurentPoly d = link.substituted(diag);
    LaurentPoly tm1 = LaurentPoly::monomial(1, 1) - LaurentPoly::constant(1, 1);
    return tm1 * d;
}

inline int delta_from_single_var(const LaurentPoly& sv) {
    return sv.eval_int({Int(-1)}) == 0 ? 1 : 0;
}

// Fox Jacobian of the Artin presentation: n x n matrix of the relators
// beta(x_i) x_i^{-1} for a pure braid beta on n strands.
inline PolyMatrix artin_alexander_matrix(const BraidWord& beta) {
    const int n = beta.strands();
    if (!beta.is_pure()) throw std::invalid_argument("full braid must be pure");
    FreeAutomorphism phi = artin_action(beta);
    PolyMatrix J(n, std::vector<LaurentPoly>(n, LaurentPoly(n)));
    for (int i = 1; i <= n; ++i) {
        FreeWord rel = phi.image(i) * FreeWord::generator(n, i).inverse();
        for (int j = 1; j <= n; ++j) J[i - 1][j - 1] = fox_derivative_ab(rel, j);
    }
    return J;
}

// Link polynomial from the Artin presentation: delete row i0 and column j0,
// take the determinant and divide by (t_{j0} - 1). Up to unit the result is
// independent of the deleted indices.
inline LaurentPoly link_poly_from_artin(const PolyMatrix& J, int row_omit, int col_omit) {
    const int n = (int)J.size();
    if (row_omit < 1 || row_omit > n || col_omit < 1 || col_omit > n)
        throw std::invalid_argument("index out of range");
    PolyMatrix sub;
    for (int i = 0; i < n; ++i) {
        if (i == row_omit - 1) continue;
        std::vector<LaurentPoly> row;
        for (int j = 0; j < n; ++j) {
            if (j == col_omit - 1) continue;
            row.push_back(J[i][j]);
        }
        sub.push_back(std::move(row));
    }
    LaurentPoly d = poly_det(sub);
    Exps e(n, 0);
    e[col_omit - 1] = 1;
    return divide_by_binomial_minus_one(d, e);
}

}  // namespace skewlink
