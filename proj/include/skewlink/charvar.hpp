#pragma once

#include "arrangement.hpp"
#include "cyclotomic.hpp"
#include "subtorus.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace skewlink {

struct TorsionCount {
    int p = 2;
    int k = 1;
    long long count = 0;
};

// ------------------------- grid evaluation -------------------------

namespace detail {

inline std::vector<int> decode_point(long long idx, int p, int n) {
    std::vector<int> pt(n);
    for (int i = n - 1; i >= 0; --i) {
        pt[i] = (int)(idx % p);
        idx /= p;
    }
    return pt;
}

inline long long pow_ll(int p, int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

}  // namespace detail

// number of points of Omega_p^n at which the polynomial vanishes (exact)
inline long long count_torsion_zeros(const LaurentPoly& poly, int p, int threads = 1) {
    if (!is_prime(p)) throw std::invalid_argument("torsion order must be prime");
    const int n = poly.nvars();
    const long long total = detail::pow_ll(p, n);

    struct Term {
        std::vector<int> exps;
        Int coeff;
    };
    std::vector<Term> terms;
    terms.reserve(poly.term_count());
    for (auto& [e, c] : poly.terms()) {
        Term t;
        t.exps.resize(n);
        for (int i = 0; i < n; ++i) t.exps[i] = (int)(((e[i] % p) + p) % p);
        t.coeff = c;
        terms.push_back(std::move(t));
    }

    auto count_range = [&](long long lo, long long hi) {
        long long cnt = 0;
        std::vector<int> pt = detail::decode_point(lo, p, n);
        std::vector<Int> buckets(p);
        for (long long idx = lo; idx < hi; ++idx) {
            for (auto& b : buckets) b = 0;
            for (auto& t : terms) {
                int dot = 0;
                for (int i = 0; i < n; ++i) dot += t.exps[i] * pt[i];
                buckets[dot % p] += t.coeff;
            }
            bool zero = true;
            for (int a = 1; a < p && zero; ++a)
                if (buckets[a] != buckets[0]) zero = false;
            if (zero) ++cnt;
            // odometer step
            for (int i = n - 1; i >= 0; --i) {
                if (++pt[i] < p) break;
                pt[i] = 0;
            }
        }
        return cnt;
    };

    if (threads <= 1 || total < 512) return count_range(0, total);
    int nt = std::min<long long>(threads, total);
    std::vector<long long> partial(nt, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        long long lo = total * t / nt, hi = total * (t + 1) / nt;
        pool.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    long long sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

// determinant of a matrix of cyclotomic values (DP over column subsets)
inline CyclotomicValue cyc_det(const std::vector<std::vector<CyclotomicValue>>& mat, int p) {
    const int n = (int)mat.size();
    std::map<std::uint32_t, CyclotomicValue> cur;
    cur.emplace(0, CyclotomicValue::integer(p, 1));
    for (int r = 0; r < n; ++r) {
        std::map<std::uint32_t, CyclotomicValue> nxt;
        for (auto& [used, val] : cur) {
            for (int c = 0; c < n; ++c) {
                if (used & (1u << c)) continue;
                int less = 0;
                for (int u = 0; u < c; ++u)
                    if (used & (1u << u)) ++less;
                CyclotomicValue piece = val * mat[r][c];
                if ((r - less) % 2 != 0) piece = -piece;
                auto key = used | (1u << c);
                auto it = nxt.find(key);
                if (it == nxt.end()) nxt.emplace(key, std::move(piece));
                else it->second += piece;
            }
        }
        cur = std::move(nxt);
    }
    return cur.at((1u << n) - 1);
}

// count points of Omega_p^n where all (n-k) x (n-k) minors of M vanish
inline long long count_minor_zeros(const AlexMatrix& M, int p, int k, int threads = 1) {
    if (!is_prime(p)) throw std::invalid_argument("torsion order must be prime");
    const int n = M.cols;
    const int m = n - k;
    if (m == 0) return 0;  // unit ideal
    const long long total = detail::pow_ll(p, n);

    std::vector<std::vector<int>> row_sets, col_sets;
    std::vector<int> sel;
    std::function<void(int, int, int, std::vector<std::vector<int>>&)> pick =
        [&](int start, int depth, int limit, std::vector<std::vector<int>>& out) {
            if (depth == m) {
                out.push_back(sel);
                return;
            }
            for (int c = start; c <= limit - (m - depth); ++c) {
                sel.push_back(c);
                pick(c + 1, depth + 1, limit, out);
                sel.pop_back();
            }
        };
    pick(0, 0, M.rows, row_sets);
    pick(0, 0, M.cols, col_sets);

    auto count_range = [&](long long lo, long long hi) {
        long long cnt = 0;
        for (long long idx = lo; idx < hi; ++idx) {
            auto pt = detail::decode_point(idx, p, n);
            std::vector<std::vector<CyclotomicValue>> ev(
                M.rows, std::vector<CyclotomicValue>(M.cols, CyclotomicValue(p)));
            for (int i = 0; i < M.rows; ++i)
                for (int j = 0; j < M.cols; ++j) ev[i][j] = eval_torsion(M.entries[i][j], p, pt);
            bool all_zero = true;
            for (auto& rs : row_sets) {
                for (auto& cs : col_sets) {
                    std::vector<std::vector<CyclotomicValue>> sub(
                        m, std::vector<CyclotomicValue>(m, CyclotomicValue(p)));
                    for (int a = 0; a < m; ++a)
                        for (int b = 0; b < m; ++b) sub[a][b] = ev[rs[a]][cs[b]];
                    if (!cyc_det(sub, p).is_zero()) {
                        all_zero = false;
                        break;
                    }
                }
                if (!all_zero) break;
            }
            if (all_zero) ++cnt;
        }
        return cnt;
    };

    if (threads <= 1 || total < 64) return count_range(0, total);
    int nt = std::min<long long>(threads, total);
    std::vector<long long> partial(nt, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        long long lo = total * t / nt, hi = total * (t + 1) / nt;
        pool.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    long long sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

// ------------------------- Torres / cabling -------------------------

// Sumners-Woods: Delta of the (a,b)-cable about the given component.
// The component is moved to the last slot; `linking` holds its linking
// numbers with the other components in their residual order.
inline LaurentPoly cable_link_poly(const LaurentPoly& link_poly, int component, int a, int b,
                                   const std::vector<int>& linking) {
    const int n = link_poly.nvars();
    if (component < 1 || component > n) throw std::invalid_argument("component out of range");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("cable parameters must be coprime");
    if ((int)linking.size() != n - 1) throw std::invalid_argument("linking vector arity mismatch");

    // move the cabled component to the last variable
    LaurentPoly base = link_poly;
    if (component != n) {
        MonomialSubstitution swap = MonomialSubstitution::identity(n);
        std::swap(swap.images[component - 1], swap.images[n - 1]);
        base = base.substituted(swap);
    }
    // t_n -> t_n^a t_{n+1}, other variables unchanged
    MonomialSubstitution sub;
    sub.nvars_in = n;
    sub.nvars_out = n + 1;
    sub.images.resize(n);
    for (int i = 0; i < n; ++i) {
        sub.images[i].sign = 1;
        sub.images[i].exps.assign(n + 1, 0);
        sub.images[i].exps[i] = 1;
    }
    sub.images[n - 1].exps[n - 1] = a;
    sub.images[n - 1].exps[n] = 1;
    LaurentPoly shifted = base.substituted(sub);
    // factor T^a t_n^b t_{n+1}^b - 1 with T = prod t_i^{l_i}
    Exps fe(n + 1, 0);
    for (int i = 0; i < n - 1; ++i) fe[i] = a * linking[i];
    fe[n - 1] += b;
    fe[n] += b;
    LaurentPoly factor = LaurentPoly::term(n + 1, fe, 1) - LaurentPoly::constant(n + 1, 1);
    return factor * shifted;
}

// Torres specialization: set the component's variable to 1 and divide by
// T - 1; returns Delta of the sublink obtained by deleting the component.
inline LaurentPoly torres_specialize(const LaurentPoly& link_poly, int component,
                                     const std::vector<int>& linking) {
    const int n = link_poly.nvars();
    if (component < 1 || component > n) throw std::invalid_argument("component out of range");
    if ((int)linking.size() != n - 1) throw std::invalid_argument("linking vector arity mismatch");
    MonomialSubstitution sub;
    sub.nvars_in = n;
    sub.nvars_out = n - 1;
    sub.images.resize(n);
    int out = 0;
    for (int i = 0; i < n; ++i) {
        sub.images[i].sign = 1;
        sub.images[i].exps.assign(n - 1, 0);
        if (i != component - 1) {
            sub.images[i].exps[out] = 1;
            ++out;
        }
    }
    LaurentPoly specialized = link_poly.substituted(sub);
    Exps T(linking.begin(), linking.end());
    if (specialized.is_zero()) throw std::domain_error("specialized polynomial is zero");
    return divide_by_binomial_minus_one(specialized, T);
}

// Tors_{2,1} recursion: 2^{n-1} - (1+(-1)^n)/2 + delta(A) + sum of deltas of
// the indecomposable odd proper subarrangements.
inline long long tors2_recursion(int n, int delta_a, const std::vector<int>& gamma_deltas) {
    long long v = (1ll << (n - 1)) - ((n % 2 == 0) ? 1 : 0) + delta_a;
    for (int d : gamma_deltas) v += d;
    return v;
}

// ------------------------- Moebius counting -------------------------

namespace detail {

using FpRow = std::vector<int>;
using FpSpace = std::vector<FpRow>;  // reduced row echelon basis of the span

inline FpSpace rref_mod_p(std::vector<FpRow> rows, int p) {
    int m = (int)rows.size();
    int n = m ? (int)rows[0].size() : 0;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c] % p != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if ((rows[r][c] * x) % p == 1 % p) inv = x;
        for (auto& x : rows[r]) x = (x * inv) % p;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            int f = rows[i][c] % p;
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline bool space_contains(const FpSpace& big, const FpSpace& small, int p) {
    for (auto& row : small) {
        FpRow v = row;
        for (auto& b : big) {
            int lead = -1;
            for (int i = 0; i < (int)b.size(); ++i)
                if (b[i] != 0) { lead = i; break; }
            if (lead < 0 || v[lead] == 0) continue;
            int f = v[lead];
            for (int i = 0; i < (int)v.size(); ++i) v[i] = ((v[i] - f * b[i]) % p + p) % p;
        }
        for (int x : v)
            if (x != 0) return false;
    }
    return true;
}

}  // namespace detail

// p-torsion points on a union of codimension-1 subtori through 1, counted by
// the Moebius function of the intersection lattice of the corresponding
// hyperplane arrangement over F_p.
inline long long subtori_tors(const std::vector<Subtorus>& tori, int p) {
    if (!is_prime(p)) throw std::invalid_argument("torsion order must be prime");
    if (tori.empty()) return 0;
    const int n = tori.front().nvars;
    std::vector<detail::FpRow> hyps;
    for (auto& t : tori) {
        if (t.nvars != n) throw std::invalid_argument("mixed ambient dimensions");
        if (t.translated())
            throw std::invalid_argument("translated subtorus: Moebius count needs tori through 1");
        if (t.codim() != 1)
            throw std::invalid_argument("Moebius count expects codimension-1 subtori");
        detail::FpRow row(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            row[i] = ((t.equations[0].exps[i] % p) + p) % p;
            if (row[i] != 0) zero = false;
        }
        if (zero) return detail::pow_ll(p, n);  // the whole torsion grid satisfies t^a = 1
        hyps.push_back(std::move(row));
    }
    // dedupe hyperplanes
    std::set<detail::FpSpace> uniq;
    for (auto& h : hyps) uniq.insert(detail::rref_mod_p({h}, p));
    std::vector<detail::FpSpace> hs(uniq.begin(), uniq.end());

    // intersection lattice: all distinct spans of subsets of the hyperplanes
    std::set<detail::FpSpace> elems;
    const int t = (int)hs.size();
    for (unsigned mask = 1; mask < (1u << t); ++mask) {
        std::vector<detail::FpRow> rows;
        for (int i = 0; i < t; ++i)
            if (mask & (1u << i))
                for (auto& r : hs[i]) rows.push_back(r);
        elems.insert(detail::rref_mod_p(std::move(rows), p));
    }
    std::vector<detail::FpSpace> spaces(elems.begin(), elems.end());
    std::sort(spaces.begin(), spaces.end(),
              [](auto& a, auto& b) { return a.size() < b.size(); });
    std::vector<long long> mu(spaces.size());
    for (std::size_t x = 0; x < spaces.size(); ++x) {
        long long s = -1;  // mu(0hat, 0hat) = 1 and the sum over [0hat, x] vanishes
        for (std::size_t y = 0; y < spaces.size(); ++y)
            if (y != x && detail::space_contains(spaces[x], spaces[y], p)) s -= mu[y];
        mu[x] = s;
    }
    long long totalv = 0;
    for (std::size_t x = 0; x < spaces.size(); ++x) {
        int dim = n - (int)spaces[x].size();
        totalv -= mu[x] * detail::pow_ll(p, dim);
    }
    return totalv;
}

// ------------------------- spec-level pipeline -------------------------

// multivariable Alexander polynomial of a resolved spec, in its canonical
// presentation coordinates (x-basis); n >= 2, no cable steps
inline LaurentPoly alexander_poly(const Resolved& r,
                                  const std::optional<std::vector<FreeWord>>& basis = std::nullopt) {
    if (r.is_cable())
        throw std::invalid_argument("cable specs resolve at the link-polynomial level");
    return alexander_poly_from_xi(r.xi, r.base_n, basis);
}

// Alexander polynomial of the link, in meridian coordinates; cable chains are
// resolved with the Sumners-Woods formula, tracking linking numbers.
inline LaurentPoly link_alexander_poly(const Resolved& r) {
    LaurentPoly lp(1);
    LinkingMatrix lk;
    int n = r.base_n;
    if (n == 1) {
        lp = LaurentPoly::constant(1, 1);
        lk = {{0}};
    } else {
        lp = link_poly_from_alexander(alexander_poly_from_xi(r.xi, r.base_n));
        lk = r.linking_known ? r.linking : LinkingMatrix();
    }
    for (auto& step : r.cables) {
        for (int rep = 0; rep < step.count; ++rep) {
            int comp = (rep == 0) ? step.component : n;  // iterate about the newest component
            if (n == 1) {
                // first cable of the trivial arrangement yields the Hopf-pair
                // polynomial 1 (the n=1 case of the formula degenerates)
                lp = LaurentPoly::constant(2, 1);
                lk = {{0, step.sign}, {step.sign, 0}};
                n = 2;
                continue;
            }
            if (lk.empty())
                throw std::invalid_argument("cable needs linking data: " + r.label);
            std::vector<int> lvec;
            for (int i = 1; i <= n; ++i)
                if (i != comp) lvec.push_back(lk[i - 1][comp - 1]);
            lp = cable_link_poly(lp, comp, 1, step.sign, lvec);
            // linking of the new component n+1 (in the moved-to-last labels):
            // same as comp against the others, and step.sign against comp
            LinkingMatrix nl(n + 1, std::vector<int>(n + 1, 0));
            std::vector<int> old_index;  // new label -> old label, comp moved last
            for (int i = 1; i <= n; ++i)
                if (i != comp) old_index.push_back(i);
            old_index.push_back(comp);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    nl[i][j] = lk[old_index[i] - 1][old_index[j] - 1];
            for (int i = 0; i < n - 1; ++i)
                nl[i][n] = nl[n][i] = lk[old_index[i] - 1][comp - 1];
            nl[n - 1][n] = nl[n][n - 1] = step.sign;
            lk = std::move(nl);
            ++n;
        }
    }
    return lp;
}

inline LaurentPoly single_var_poly(const Resolved& r) {
    if (r.planes() == 1) {
        // Delta = 1, so Delta(t) = (t-1)
        return LaurentPoly::monomial(1, 1) - LaurentPoly::constant(1, 1);
    }
    return single_var_from_link_poly(link_alexander_poly(r));
}

inline int delta_invariant(const Resolved& r) {
    return delta_from_single_var(single_var_poly(r));
}

inline AlexMatrix alexander_matrix(
    const Resolved& r, const std::optional<std::vector<FreeWord>>& basis = std::nullopt) {
    if (r.is_cable())
        throw std::invalid_argument("cable specs resolve at the link-polynomial level");
    auto b = basis ? basis : r.display_basis;
    return alexander_matrix_from_xi(r.xi, b);
}

// true iff every (n-k) x (n-k) minor becomes the zero polynomial after
// substituting the parametrization of the torus
inline bool verify_subtorus(const AlexMatrix& M, const Subtorus& torus, int k) {
    if (torus.nvars != M.cols) throw std::invalid_argument("torus arity mismatch");
    auto par = parametrize(torus);
    if (!par) throw std::invalid_argument("subtorus is not parametrizable");
    const int m = M.cols - k;
    if (m == 0) return false;  // unit ideal never vanishes
    AlexMatrix S;
    S.rows = M.rows;
    S.cols = M.cols;
    S.entries.assign(M.rows, std::vector<LaurentPoly>(M.cols, LaurentPoly(par->nvars_out)));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) S.entries[i][j] = M.entries[i][j].substituted(*par);
    // minors of the substituted matrix are the substituted minors
    for (auto& minor : ek_minors(S, k))
        if (!minor.is_zero()) return false;
    return true;
}

inline bool verify_subtorus(const Resolved& r, const Subtorus& torus, int k,
                            const std::optional<std::vector<FreeWord>>& basis = std::nullopt) {
    return verify_subtorus(alexander_matrix(r, basis), torus, k);
}

// Tors_{p,k}: number of p-torsion points of V_k (exact cyclotomic test).
// Fast path for k = 1, n >= 3 counts zeros of the Alexander polynomial.
inline TorsionCount tors_count(const Resolved& r, int p, int k, int threads = 1) {
    if (!is_prime(p)) throw std::invalid_argument("torsion order must be prime");
    const int n = r.planes();
    if (k < 1 || k > n) throw std::invalid_argument("ideal index out of range");
    TorsionCount out;
    out.p = p;
    out.k = k;
    if (r.is_cable()) {
        if (k != 1)
            throw std::invalid_argument("cable specs support k = 1 only (polynomial route)");
        out.count = count_torsion_zeros(link_alexander_poly(r), p, threads);
        return out;
    }
    if (k == n) {
        out.count = 0;  // E_n is the unit ideal
        return out;
    }
    if (k == 1 && n >= 3) {
        out.count = count_torsion_zeros(alexander_poly(r), p, threads);
        return out;
    }
    if (n == 1) {
        out.count = 0;
        return out;
    }
    out.count = count_minor_zeros(alexander_matrix(r), p, k, threads);
    return out;
}

}  // namespace skewlink
