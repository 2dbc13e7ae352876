#pragma once

#include "laurent.hpp"

#include <optional>
#include <string>

namespace skewlink {

// Translated subtorus of (C*)^n cut out by monomial equations t^a = eps,
// eps = +-1. Equations must be independent over the integers.
struct Subtorus {
    struct Equation {
        Exps exps;     // a in Z^n
        int sign = 1;  // t^a = sign
    };

    int nvars = 0;
    std::vector<Equation> equations;

    Subtorus() = default;
    explicit Subtorus(int n) : nvars(n) {}

    void add_equation(Exps a, int sign) {
        if ((int)a.size() != nvars) throw std::invalid_argument("equation arity mismatch");
        if (sign != 1 && sign != -1) throw std::invalid_argument("equation sign must be +-1");
        equations.push_back({std::move(a), sign});
    }
    void add_coordinate(int var, int value) {  // t_var = value (+-1)
        Exps a(nvars, 0);
        a.at(var - 1) = 1;
        add_equation(std::move(a), value);
    }

    int codim() const { return (int)equations.size(); }
    bool translated() const {
        for (auto& e : equations)
            if (e.sign < 0) return true;
        return false;
    }

    std::string str() const {
        if (equations.empty()) return "(full torus)";
        std::string s;
        for (auto& e : equations) {
            if (!s.empty()) s += " & ";
            std::string lhs, rhs;
            for (int i = 0; i < nvars; ++i) {
                if (e.exps[i] == 0) continue;
                std::string m = "t" + std::to_string(i + 1);
                if (e.exps[i] != 1) m += "^" + std::to_string(e.exps[i]);
                if (lhs.empty()) lhs = m;
                else lhs += "*" + m;
            }
            if (lhs.empty()) lhs = "1";
            s += lhs + "=" + (e.sign == 1 ? "1" : "-1");
        }
        return s;
    }
};

// Parametrize the subtorus as a signed monomial map from a lower-dimensional
// torus: requires the equation system to triangularize over the integers with
// unit pivots. Returns nullopt otherwise.
inline std::optional<MonomialSubstitution> parametrize(const Subtorus& t) {
    const int n = t.nvars;
    std::vector<std::pair<Exps, int>> rows;
    for (auto& e : t.equations) rows.push_back({e.exps, e.sign});

    std::vector<std::pair<Exps, int>> done;
    std::vector<int> pivot_var;
    while (!rows.empty()) {
        int rsel = -1, vsel = -1;
        for (std::size_t r = 0; r < rows.size() && rsel < 0; ++r)
            for (int v = 0; v < n; ++v) {
                bool taken = false;
                for (int pv : pivot_var)
                    if (pv == v) taken = true;
                if (taken) continue;
                if (rows[r].first[v] == 1 || rows[r].first[v] == -1) {
                    rsel = (int)r;
                    vsel = v;
                    break;
                }
            }
        if (rsel < 0) {
            // leftover rows: either dependent (all-zero exponents) or stuck
            for (auto& [a, s] : rows)
                for (int v = 0; v < n; ++v)
                    if (a[v] != 0) return std::nullopt;  // no unit pivot available
            return std::nullopt;  // dependent equations
        }
        auto [a, s] = rows[rsel];
        rows.erase(rows.begin() + rsel);
        if (a[vsel] == -1) {
            for (auto& x : a) x = -x;
            // sign of t^{-a} = eps is eps itself since eps = +-1
        }
        auto eliminate = [&](std::pair<Exps, int>& q) {
            int k = q.first[vsel];
            if (k == 0) return;
            for (int v = 0; v < n; ++v) q.first[v] -= k * a[v];
            if ((k % 2 != 0) && s == -1) q.second = -q.second;
        };
        for (auto& q : rows) eliminate(q);
        for (auto& q : done) eliminate(q);
        done.push_back({a, s});
        pivot_var.push_back(vsel);
    }

    std::vector<int> free_vars;
    for (int v = 0; v < n; ++v) {
        bool piv = false;
        for (int pv : pivot_var)
            if (pv == v) piv = true;
        if (!piv) free_vars.push_back(v);
    }
    MonomialSubstitution sub;
    sub.nvars_in = n;
    sub.nvars_out = (int)free_vars.size();
    sub.images.resize(n);
    for (std::size_t k = 0; k < free_vars.size(); ++k) {
        sub.images[free_vars[k]].sign = 1;
        sub.images[free_vars[k]].exps.assign(sub.nvars_out, 0);
        sub.images[free_vars[k]].exps[k] = 1;
    }
    for (std::size_t r = 0; r < done.size(); ++r) {
        auto& [a, s] = done[r];
        int v = pivot_var[r];
        MonomialSubstitution::Image im;
        im.sign = s;
        im.exps.assign(sub.nvars_out, 0);
        for (std::size_t k = 0; k < free_vars.size(); ++k)
            im.exps[k] = -a[free_vars[k]];
        sub.images[v] = std::move(im);
    }
    return sub;
}

}  // namespace skewlink
