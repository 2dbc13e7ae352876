#pragma once

#include "alexander.hpp"
#include "subtorus.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace skewlink {

using LinkingMatrix = std::vector<std::vector<int>>;

// Combinatorial description of a 2-arrangement. Catalog entries are expanded
// specs (horizontal or xi-word) carrying their catalog name.
struct ArrangementSpec {
    enum class Kind { Horizontal, XiWord, Cable };

    Kind kind = Kind::Horizontal;
    std::vector<int> perm;          // Horizontal
    PureBraidWord xi;               // XiWord
    int xi_planes = 0;              // XiWord: number of planes (strands + 1)
    std::string name;               // catalog tag, empty for bare specs
    std::shared_ptr<ArrangementSpec> base;  // Cable
    int cable_component = 0;
    int cable_sign = 1;
    int cable_count = 1;

    static ArrangementSpec horizontal(std::vector<int> p) {
        ArrangementSpec s;
        s.kind = Kind::Horizontal;
        s.perm = std::move(p);
        return s;
    }
    static ArrangementSpec xi_word(PureBraidWord w, int planes) {
        if (planes != w.strands() + 1)
            throw std::invalid_argument("xi word must braid on n-1 strands");
        ArrangementSpec s;
        s.kind = Kind::XiWord;
        s.xi = std::move(w);
        s.xi_planes = planes;
        return s;
    }
    static ArrangementSpec cable(ArrangementSpec b, int component, int sign, int count) {
        if (count < 1) throw std::invalid_argument("cable count must be >= 1");
        if (sign != 1 && sign != -1) throw std::invalid_argument("cable sign must be +-1");
        ArrangementSpec s;
        s.kind = Kind::Cable;
        s.base = std::make_shared<ArrangementSpec>(std::move(b));
        s.cable_component = component;
        s.cable_sign = sign;
        s.cable_count = count;
        return s;
    }

    std::string str() const;
};

// ------------------------- permutation combinatorics -------------------------

inline void check_permutation(const std::vector<int>& perm) { detail::check_permutation(perm); }

// epsilon-r cabling move on the component with height k: shifts the heights
// above k up by r and replaces k by an ascending (eps=+1) or descending
// (eps=-1) run of r+1 consecutive heights.
inline std::vector<int> cable_perm(const std::vector<int>& perm, int k, int eps, int r) {
    check_permutation(perm);
    if (eps != 1 && eps != -1) throw std::invalid_argument("cable sign must be +-1");
    if (r < 1) throw std::invalid_argument("cable count must be >= 1");
    int n = (int)perm.size();
    int slot = -1;
    for (int i = 0; i < n; ++i)
        if (perm[i] == k) slot = i;
    if (slot < 0) throw std::invalid_argument("cabled height absent from permutation");
    std::vector<int> out;
    out.reserve(n + r);
    for (int i = 0; i < n; ++i) {
        if (i == slot) {
            for (int d = 0; d <= r; ++d)
                out.push_back(k + eps * d + (1 - eps) / 2 * r);
        } else {
            out.push_back(perm[i] < k ? perm[i] : perm[i] + r);
        }
    }
    return out;
}

namespace detail {

struct Block {
    int begin = 0;   // slot range [begin, end)
    int end = 0;
    int lo = 0;      // value interval [lo, hi]
    int hi = 0;
    bool negative = false;  // descending run (size >= 2)
};

// greedy maximal monotone runs of consecutive heights
inline std::vector<Block> greedy_blocks(const std::vector<int>& perm) {
    std::vector<Block> blocks;
    int n = (int)perm.size();
    int i = 0;
    while (i < n) {
        int j = i + 1;
        int dir = 0;
        while (j < n) {
            int step = perm[j] - perm[j - 1];
            if (dir == 0 && (step == 1 || step == -1)) dir = step;
            else if (step != dir) break;
            if (step != 1 && step != -1) break;
            ++j;
        }
        if (dir == 0) j = i + 1;
        Block b;
        b.begin = i;
        b.end = j;
        b.lo = std::min(perm[i], perm[j - 1]);
        b.hi = std::max(perm[i], perm[j - 1]);
        b.negative = (j - i >= 2) && (dir == -1);
        blocks.push_back(b);
        i = j;
    }
    return blocks;
}

}  // namespace detail

// Contract each maximal monotone block of consecutive heights to a single
// number and renumber. Returns the input unchanged iff every block is a
// singleton.
inline std::vector<int> contract_blocks(const std::vector<int>& perm) {
    check_permutation(perm);
    auto blocks = detail::greedy_blocks(perm);
    if ((int)blocks.size() == (int)perm.size()) return perm;
    std::vector<const detail::Block*> by_value(blocks.size());
    {
        std::vector<const detail::Block*> tmp;
        for (auto& b : blocks) tmp.push_back(&b);
        std::sort(tmp.begin(), tmp.end(),
                  [](auto* a, auto* b) { return a->lo < b->lo; });
        by_value = std::move(tmp);
    }
    std::vector<int> rank_of_lo;
    std::vector<int> out;
    out.reserve(blocks.size());
    for (auto& b : blocks) {
        int rank = 0;
        for (std::size_t v = 0; v < by_value.size(); ++v)
            if (by_value[v] == &b) rank = (int)v + 1;
        out.push_back(rank);
    }
    return out;
}

// number of contraction rounds needed to reach (1); nullopt when stuck
inline std::optional<int> contraction_depth(const std::vector<int>& perm) {
    std::vector<int> cur = perm;
    int rounds = 0;
    while (cur.size() > 1) {
        auto nxt = contract_blocks(cur);
        if (nxt == cur) return std::nullopt;
        cur = std::move(nxt);
        ++rounds;
    }
    return rounds;
}

// Normal form of a depth <= 2 completely decomposable arrangement:
// negative blocks I_1 <= ... <= I_r followed by one positive block J.
struct NormalFormD2 {
    std::vector<int> neg_sizes;  // nondecreasing, each >= 2 (empty when depth <= 1)
    int j_size = 0;              // >= 1
    int n = 0;                   // total plane count

    int r() const { return (int)neg_sizes.size(); }

    // canonical permutation (I_1 desc)(I_2 desc)...(J asc)
    std::vector<int> permutation() const {
        std::vector<int> out;
        int next = 1;
        for (int s : neg_sizes) {
            for (int v = next + s - 1; v >= next; --v) out.push_back(v);
            next += s;
        }
        for (int v = next; v <= n; ++v) out.push_back(v);
        return out;
    }
};

inline NormalFormD2 depth2_normal_form(const std::vector<int>& perm) {
    check_permutation(perm);
    auto d = contraction_depth(perm);
    if (!d || *d > 2)
        throw std::invalid_argument("not depth <= 2 at the permutation level");
    NormalFormD2 nf;
    nf.n = (int)perm.size();
    for (auto& b : detail::greedy_blocks(perm))
        if (b.negative) nf.neg_sizes.push_back(b.hi - b.lo + 1);
    std::sort(nf.neg_sizes.begin(), nf.neg_sizes.end());
    int sum = std::accumulate(nf.neg_sizes.begin(), nf.neg_sizes.end(), 0);
    nf.j_size = nf.n - sum;
    if (nf.j_size < 1)
        throw std::invalid_argument("normal form requires a positive block");
    if (nf.r() == 1 && nf.neg_sizes[0] > nf.j_size)
        throw std::invalid_argument(
            "block sizes violate the normal-form conditions (lower-depth arrangement)");
    return nf;
}

// Codimension lists of the bottom variety V_{n-2}: Sigma_1 for components
// through 1 and the full Sigma.
struct SigmaLists {
    std::vector<int> through_one;  // sorted
    std::vector<int> full;         // sorted

    std::string str(const std::vector<int>& v) const {
        std::string s;
        for (std::size_t i = 0; i < v.size();) {
            std::size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            if (!s.empty()) s += ",";
            s += std::to_string(v[i]);
            if (j - i > 1) s += "_" + std::to_string(j - i);
            i = j;
        }
        return s.empty() ? "0" : s;
    }
    std::string full_str() const { return str(full); }
};

inline SigmaLists sigma_lists(const NormalFormD2& nf) {
    if (nf.n < 3) throw std::invalid_argument("sigma lists need n >= 3");
    SigmaLists out;
    const int n = nf.n;
    const int r = nf.r();
    for (int s : nf.neg_sizes) out.through_one.push_back(n + 1 - s);
    if (nf.j_size > 1) out.through_one.push_back(n + 1 - nf.j_size);
    out.full = out.through_one;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        int codim = r + 1;
        for (int p = 0; p < r; ++p)
            if (!(mask & (1u << p))) codim += nf.neg_sizes[p] - 1;
        out.full.push_back(codim);
    }
    std::sort(out.through_one.begin(), out.through_one.end());
    std::sort(out.full.begin(), out.full.end());
    // length check per the closed form: d1 = r + eps_J + 1, d = 2^r + r + eps_J
    int eps = nf.j_size > 1 ? 0 : -1;
    if ((int)out.through_one.size() != r + eps + 1 ||
        (int)out.full.size() != (1 << r) + r + eps)
        throw std::logic_error("sigma list lengths disagree with the closed form");
    return out;
}

// Irreducible components of the bottom variety V_{n-2} for a depth <= 2
// normal form, in the block-basis coordinates of its canonical permutation:
// translated tori first (one per nonempty subset P of the negative blocks),
// then the tori through 1.
inline std::vector<Subtorus> bottom_components_d2(const NormalFormD2& nf) {
    const int n = nf.n;
    const int r = nf.r();
    if (n < 3) throw std::invalid_argument("bottom components need n >= 3");
    std::vector<int> start(r), maxv(r);
    {
        int next = 1;
        for (int p = 0; p < r; ++p) {
            start[p] = next;
            maxv[p] = next + nf.neg_sizes[p] - 1;
            next += nf.neg_sizes[p];
        }
    }
    std::vector<Subtorus> out;
    auto push_desc = [&](const std::vector<std::pair<int, int>>& eqs) {
        Subtorus t(n);
        auto sorted = eqs;
        std::sort(sorted.begin(), sorted.end(),
                  [](auto& a, auto& b) { return a.first > b.first; });
        for (auto& [var, val] : sorted) t.add_coordinate(var, val);
        out.push_back(std::move(t));
    };
    for (unsigned mask = (1u << r) - 1; mask >= 1; --mask) {
        std::vector<std::pair<int, int>> eqs{{n, 1}};
        for (int p = 0; p < r; ++p) {
            if (mask & (1u << p)) {
                eqs.push_back({maxv[p], -1});
            } else {
                for (int v = start[p]; v <= maxv[p]; ++v) eqs.push_back({v, 1});
            }
        }
        push_desc(eqs);
    }
    for (int p = 0; p < r; ++p) {
        std::vector<std::pair<int, int>> eqs;
        for (int v = 1; v <= n; ++v)
            if (v < start[p] || v >= maxv[p]) eqs.push_back({v, 1});
        push_desc(eqs);
    }
    if (nf.j_size > 1) {
        std::vector<std::pair<int, int>> eqs;
        int jlo = n - nf.j_size + 1;
        for (int v = 1; v <= n; ++v)
            if (v < jlo || v == n) eqs.push_back({v, 1});
        push_desc(eqs);
    }
    return out;
}

// partition function p(n) by Euler's pentagonal recurrence, exact
inline Int partition_count(int n) {
    std::vector<Int> P(n + 1, 0);
    P[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Int s = 0;
        for (int j = 1;; ++j) {
            long long g1 = (long long)j * (3 * j - 1) / 2;
            long long g2 = (long long)j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            int sgn = (j % 2 == 0) ? -1 : 1;
            if (g1 <= k) s += sgn * P[k - (int)g1];
            if (g2 <= k) s += sgn * P[k - (int)g2];
        }
        P[k] = s;
    }
    return P[n];
}

// number of homotopy classes of depth <= 2 completely decomposable
// arrangements of n planes: p(n-1) - floor((n-1)/2)
inline Int count_d2_classes(int n) {
    if (n < 1) throw std::invalid_argument("plane count must be positive");
    return partition_count(n - 1) - (n - 1) / 2;
}

// direct enumeration of valid normal forms (plus the depth <= 1 class)
inline Int enumerate_d2_classes(int n) {
    Int cnt = 1;  // identity permutation (depth 0 or 1)
    std::function<void(int, int, int, int)> rec = [&](int minpart, int total, int parts,
                                                      int first) {
        for (int s = minpart; total + s <= n - 1; ++s) {
            int j_size = n - (total + s);
            int f = parts == 0 ? s : first;
            if (!(parts + 1 == 1 && f > j_size)) cnt += 1;
            rec(s, total + s, parts + 1, f);
        }
    };
    rec(2, 0, 0, 0);
    return cnt;
}

// ------------------------- linking matrices -------------------------

inline LinkingMatrix linking_matrix_of_perm(const std::vector<int>& perm) {
    check_permutation(perm);
    int n = (int)perm.size();
    auto pos = detail::height_positions(perm);
    LinkingMatrix l(n, std::vector<int>(n, 0));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v) l[u - 1][v - 1] = (pos[u] < pos[v]) == (u < v) ? 1 : -1;
    return l;
}

inline LinkingMatrix linking_matrix_of_xi(const PureBraidWord& xi, int n) {
    LinkingMatrix l(n, std::vector<int>(n, 0));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int e = xi.net_exponent(i, j);
            l[i - 1][j - 1] = l[j - 1][i - 1] = 1 - 2 * e;
        }
    for (int i = 1; i < n; ++i) l[i - 1][n - 1] = l[n - 1][i - 1] = 1;
    return l;
}

struct LinkingEquivalence {
    std::vector<int> relabel;  // component i of m1 corresponds to relabel[i-1] of m2
    bool mirrored = false;
};

// brute-force search for a relabeling carrying m1 to m2, optionally after a
// global sign flip; n <= 8
inline std::optional<LinkingEquivalence> linking_equivalent(const LinkingMatrix& m1,
                                                            const LinkingMatrix& m2) {
    const int n = (int)m1.size();
    if ((int)m2.size() != n) return std::nullopt;
    if (n > 8) throw std::invalid_argument("relabeling search supports n <= 8");
    std::vector<int> rho(n);
    std::iota(rho.begin(), rho.end(), 1);
    for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> r = rho;
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    int want = flip ? -m1[i][j] : m1[i][j];
                    if (m2[r[i] - 1][r[j] - 1] != want) ok = false;
                }
            if (ok) return LinkingEquivalence{r, flip == 1};
        } while (std::next_permutation(r.begin(), r.end()));
    }
    return std::nullopt;
}

// ------------------------- resolution -------------------------

// display basis: within each maximal negative block I = {j..k} of the
// (rotated) permutation, y_k = x_j...x_k; identity elsewhere
inline std::optional<std::vector<FreeWord>> block_basis(const std::vector<int>& perm) {
    std::vector<int> tau = perm;
    int n = (int)tau.size();
    if (n >= 1 && tau[n - 1] != n) {
        int k = 0;
        while (tau[k] != n) ++k;
        std::rotate(tau.begin(), tau.begin() + k + 1, tau.end());
    }
    if (n < 3) return std::nullopt;
    int rank = n - 1;
    std::vector<FreeWord> basis;
    for (int i = 1; i <= rank; ++i) basis.push_back(FreeWord::generator(rank, i));
    bool nontrivial = false;
    for (auto& b : detail::greedy_blocks(tau)) {
        if (!b.negative) continue;
        if (b.hi > rank) continue;  // cannot happen after rotation; guard anyway
        FreeWord w(rank);
        for (int v = b.lo; v <= b.hi; ++v) w *= FreeWord::generator(rank, v);
        basis[b.hi - 1] = std::move(w);
        nontrivial = true;
    }
    if (!nontrivial) return std::nullopt;
    return basis;
}

struct CableStep {
    int component = 0;
    int sign = 1;
    int count = 1;
};

// A spec reduced to computational form: xi on n-1 strands plus an optional
// chain of cabling steps handled at the polynomial level.
struct Resolved {
    int base_n = 0;
    PureBraidWord xi;
    std::optional<std::vector<FreeWord>> display_basis;
    bool linking_known = false;
    LinkingMatrix linking;        // in the variable labels used by the pipeline
    std::vector<int> var_to_component;  // 1-based relabeling vars -> display components
    std::vector<CableStep> cables;
    std::string label;

    int planes() const {
        int n = base_n;
        for (auto& c : cables) n += c.count;
        return n;
    }
    bool is_cable() const { return !cables.empty(); }

    LinkingMatrix display_linking() const {
        if (!linking_known) throw std::invalid_argument("linking matrix undetermined: " + label);
        int n = base_n;
        LinkingMatrix out(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out[var_to_component[i] - 1][var_to_component[j] - 1] = linking[i][j];
        return out;
    }
};

inline const std::vector<FreeWord>& mazurovskii_basis() {
    static const std::vector<FreeWord> b = [] {
        auto g = [](int i) { return FreeWord::generator(5, i); };
        return std::vector<FreeWord>{g(1), g(3), g(1) * g(2), g(1) * g(2) * g(3) * g(4), g(5)};
    }();
    return b;
}

inline ArrangementSpec catalog(const std::string& name) {
    ArrangementSpec s;
    if (name == "K") {
        s = ArrangementSpec::horizontal({3, 4, 1, 2, 5, 6});
    } else if (name == "L") {
        s = ArrangementSpec::xi_word(
            PureBraidWord(5, {{1, 3, 1}, {2, 3, 1}, {4, 5, 1}, {1, 4, 1}, {4, 5, -1}, {2, 4, 1}}),
            6);
    } else if (name == "M") {
        s = ArrangementSpec::xi_word(
            PureBraidWord(5, {{2, 4, 1}, {1, 2, 1}, {3, 4, 1}, {1, 5, 1}, {3, 5, 1}}), 6);
    } else if (name == "Z+") {
        s = ArrangementSpec::horizontal({1, 2, 3, 4});
    } else if (name == "Z-") {
        s = ArrangementSpec::horizontal({2, 1, 3, 4});
    } else if (!name.empty() && name[0] == 'A') {
        int k = std::stoi(name.substr(name.size() > 1 && name[1] == '_' ? 2 : 1));
        if (k < 1) throw std::invalid_argument("unknown catalog name: " + name);
        std::vector<int> id(k);
        std::iota(id.begin(), id.end(), 1);
        s = ArrangementSpec::horizontal(std::move(id));
    } else {
        throw std::invalid_argument("unknown catalog name: " + name);
    }
    s.name = name;
    return s;
}

inline Resolved resolve(const ArrangementSpec& spec) {
    Resolved r;
    switch (spec.kind) {
        case ArrangementSpec::Kind::Horizontal: {
            check_permutation(spec.perm);
            r.base_n = (int)spec.perm.size();
            r.xi = xi_braid(spec.perm);
            r.display_basis = block_basis(spec.perm);
            r.linking = linking_matrix_of_perm(spec.perm);
            r.linking_known = true;
            r.var_to_component.resize(r.base_n);
            std::iota(r.var_to_component.begin(), r.var_to_component.end(), 1);
            if (spec.name == "K") r.display_basis = mazurovskii_basis();
            r.label = spec.str();
            return r;
        }
        case ArrangementSpec::Kind::XiWord: {
            r.base_n = spec.xi_planes;
            r.xi = spec.xi;
            r.var_to_component.resize(r.base_n);
            std::iota(r.var_to_component.begin(), r.var_to_component.end(), 1);
            if (spec.name == "L") {
                r.display_basis = mazurovskii_basis();
                // linking numbers in xi-variable labels; variables 3,4,5
                // correspond to components 4,5,3 of the catalog labeling
                r.linking_known = true;
                r.linking = linking_matrix_of_xi(r.xi, r.base_n);
                r.var_to_component = {1, 2, 4, 5, 3, 6};
            } else if (spec.name == "M") {
                r.linking_known = true;
                r.linking = linking_matrix_of_xi(r.xi, r.base_n);
            } else {
                r.linking_known = false;
            }
            r.label = spec.str();
            return r;
        }
        case ArrangementSpec::Kind::Cable: {
            r = resolve(*spec.base);
            int comp = spec.cable_component == 0 ? r.planes() : spec.cable_component;
            if (comp < 1 || comp > r.planes())
                throw std::invalid_argument("cable component out of range");
            r.cables.push_back({comp, spec.cable_sign, spec.cable_count});
            r.label = spec.str();
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

inline LinkingMatrix linking_matrix(const ArrangementSpec& spec) {
    if (spec.kind == ArrangementSpec::Kind::XiWord && spec.name.empty())
        throw std::invalid_argument("linking matrix undetermined for a bare xi word");
    if (spec.kind == ArrangementSpec::Kind::Cable)
        throw std::invalid_argument("linking matrix of a cable spec is not exposed");
    return resolve(spec).display_linking();
}

inline std::string ArrangementSpec::str() const {
    if (!name.empty() && kind != Kind::Cable) return "cat:" + name;
    switch (kind) {
        case Kind::Horizontal: {
            std::string s = "perm:";
            bool wide = perm.size() > 9;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if (wide && i) s += ",";
                s += std::to_string(perm[i]);
            }
            return s;
        }
        case Kind::XiWord: {
            std::string s = "xi:n=" + std::to_string(xi_planes) + ";";
            for (auto& f : xi.factors()) {
                s += "A(" + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
                if (f.exp != 1) s += "^" + std::to_string(f.exp);
            }
            return s;
        }
        case Kind::Cable:
            return "cable(" + base->str() + ",k=" + std::to_string(cable_component) +
                   ",sign=" + (cable_sign > 0 ? std::string("+") : std::string("-")) +
                   ",r=" + std::to_string(cable_count) + ")";
    }
    return "?";
}

}  // namespace skewlink
