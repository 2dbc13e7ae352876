#pragma once

#include "free_group.hpp"
#include "laurent.hpp"

namespace skewlink {

// Abelianized Fox derivative d(w)/dx_j with ab(x_i) = t_i:
//   d(uv)/dx = du/dx + ab(u) dv/dx,  dx_i/dx_j = delta_ij,
//   dx_i^{-1}/dx_j = -t_i^{-1} delta_ij.
inline LaurentPoly fox_derivative_ab(const FreeWord& w, int j) {
    const int n = w.rank();
    if (j < 1 || j > n) throw std::invalid_argument("fox derivative index out of range");
    LaurentPoly r(n);
    Exps prefix(n, 0);  // abelianization of the processed prefix, as a monomial
    for (auto& l : w.letters()) {
        if (l.gen == j) {
            if (l.sign == 1) {
                r.add_term(prefix, 1);
            } else {
                Exps e = prefix;
                e[l.gen - 1] -= 1;
                r.add_term(e, -1);
            }
        }
        prefix[l.gen - 1] += l.sign;
    }
    return r;
}

// ab(w) - 1 as a Laurent polynomial (for the fundamental Fox identity)
inline LaurentPoly abelianization_minus_one(const FreeWord& w) {
    LaurentPoly r(w.rank());
    Exps e(w.rank(), 0);
    auto ab = w.abelianized();
    for (int i = 0; i < w.rank(); ++i) e[i] = ab[i];
    r.add_term(e, 1);
    r.add_term(Exps(w.rank(), 0), -1);
    return r;
}

}  // namespace skewlink
