#include <skewlink/charvar.hpp>
#include <skewlink/textio.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace skewlink;

namespace {

FreeWord g(int rank, int i, int s = 1) { return FreeWord::generator(rank, i, s); }
LaurentPoly t(int nv, int i, int e = 1) { return LaurentPoly::monomial(nv, i, e); }
LaurentPoly c(int nv, long v) { return LaurentPoly::constant(nv, v); }

PureBraidWord random_pure(std::mt19937& rng, int strands, int len) {
    std::uniform_int_distribution<int> gi(1, strands);
    std::uniform_int_distribution<int> si(0, 1);
    PureBraidWord w(strands);
    for (int k = 0; k < len; ++k) {
        int i = gi(rng), j = gi(rng);
        if (i == j) continue;
        w.push({std::min(i, j), std::max(i, j), si(rng) ? 1 : -1});
    }
    return w;
}

const std::vector<FreeWord>& ziegler_basis() {
    static const std::vector<FreeWord> b{g(3, 1), g(3, 1) * g(3, 2), g(3, 3)};
    return b;
}

}  // namespace

TEST_CASE("gassner representation") {
    SECTION("empty braid gives the identity") {
        REQUIRE(gassner(PureBraidWord(4)) == GassnerMatrix::identity(4));
    }
    SECTION("block full twist in the block basis") {
        // A_I^2 for I = {2,3,4} inside 5 strands, basis y4 = x2x3x4
        PureBraidWord aI(5, {{2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
        std::vector<FreeWord> basis{g(5, 1), g(5, 2), g(5, 3),
                                    g(5, 2) * g(5, 3) * g(5, 4), g(5, 5)};
        auto th = gassner(aI * aI, basis);
        auto tk2 = t(5, 4) * t(5, 4);
        REQUIRE(th.entries[1][1] == tk2);
        REQUIRE(th.entries[2][2] == tk2);
        REQUIRE(th.entries[3][3] == c(5, 1));
        REQUIRE(th.entries[1][3] == (t(5, 4) + c(5, 1)) * (c(5, 1) - t(5, 2)));
        REQUIRE(th.entries[2][3] == (t(5, 4) + c(5, 1)) * (c(5, 1) - t(5, 3)));
        REQUIRE(th.entries[0][0] == c(5, 1));
        REQUIRE(th.entries[4][4] == c(5, 1));
        REQUIRE(th.entries[1][0].is_zero());
        REQUIRE(th.entries[0][3].is_zero());
    }
    SECTION("Theta(A_{1,2}^2) in the y-basis") {
        PureBraidWord a(3, {{1, 2, 1}});
        auto th = gassner(a * a, ziegler_basis());
        REQUIRE(th.entries[0][0] == t(3, 2) * t(3, 2));
        REQUIRE(th.entries[0][1] == (t(3, 2) + c(3, 1)) * (c(3, 1) - t(3, 1)));
        REQUIRE(th.entries[1][1] == c(3, 1));
        REQUIRE(th.entries[2][2] == c(3, 1));
    }
    SECTION("representation law, identity at 1, unit determinant") {
        std::mt19937 rng(606);
        for (int trial = 0; trial < 12; ++trial) {
            int n = 2 + trial % 4;  // up to 5 strands
            auto p = random_pure(rng, n, 3);
            auto q = random_pure(rng, n, 3);
            auto gp = gassner(p), gq = gassner(q);
            REQUIRE(gassner(p * q).entries == (gp * gq).entries);
            auto ones = gp.at_ones();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) REQUIRE(ones[i][j] == (i == j ? 1 : 0));
            REQUIRE(gp.det_is_unit_monomial());
        }
    }
}

TEST_CASE("alexander matrix displays") {
    SECTION("Ziegler pair, y-basis") {
        auto M = alexander_matrix_from_xi(xi_braid({2, 1, 3, 4}), ziegler_basis());
        REQUIRE(M.rows == 3);
        REQUIRE(M.cols == 4);
        auto T = [&](int i, int e = 1) { return t(4, i, e); };
        auto one = c(4, 1);
        PolyMatrix want = {
            {T(4) - T(2) * T(2), (T(2) + one) * (T(1) - one), LaurentPoly(4), one - T(1)},
            {LaurentPoly(4), T(4) - one, LaurentPoly(4), one - T(2)},
            {LaurentPoly(4), LaurentPoly(4), T(4) - one, one - T(3)},
        };
        REQUIRE(M.entries == want);
    }
    SECTION("Mazurovskii K, stored display basis") {
        auto r = resolve(catalog("K"));
        auto M = alexander_matrix(r);
        auto T = [&](int i, int e = 1) { return t(6, i, e); };
        auto one = c(6, 1);
        auto t43sq = T(4) * T(4) * T(3, -2);
        PolyMatrix want = {
            {T(6) - t43sq, LaurentPoly(6), t43sq * (T(3) + one) * (one - T(1)),
             (T(4) + one) * (T(1) - one), LaurentPoly(6), one - T(1)},
            {LaurentPoly(6), T(6) - T(3) * T(3), (T(4) + T(3)) * (T(2) - one),
             (one - T(3)) * (T(2) - one), LaurentPoly(6), one - T(2)},
            {LaurentPoly(6), LaurentPoly(6), T(6) - T(4) * T(4),
             (T(4) + one) * (T(3) - one), LaurentPoly(6), one - T(3)},
            {LaurentPoly(6), LaurentPoly(6), LaurentPoly(6), T(6) - one, LaurentPoly(6),
             one - T(4)},
            {LaurentPoly(6), LaurentPoly(6), LaurentPoly(6), LaurentPoly(6), T(6) - one,
             one - T(5)},
        };
        REQUIRE(M.entries == want);
    }
    SECTION("row identity M d = 0 for arrangement specs") {
        for (auto& spec : {"perm:21435", "perm:312546", "cat:K", "cat:L", "cat:M"}) {
            auto r = resolve(parse_spec(spec));
            for (auto& entry : alexander_matrix(r).times_d()) REQUIRE(entry.is_zero());
        }
    }
}

TEST_CASE("determinantal ideal minors") {
    auto M = alexander_matrix_from_xi(xi_braid({2, 1, 3, 4}), ziegler_basis());
    SECTION("E_n is the unit ideal") {
        auto e4 = ek_minors(M, 4);
        REQUIRE(e4.size() == 1);
        REQUIRE(e4[0] == c(4, 1));
    }
    SECTION("E_1 minors all equal a unit times (t_j-1) Delta") {
        auto delta = (t(4, 4) - c(4, 1)) * (t(4, 4) - t(4, 2) * t(4, 2));
        auto minors = ek_minors(M, 1);
        REQUIRE(minors.size() == 4);
        // deleted column j contributes the factor (t_j - 1)
        for (int j = 4; j >= 1; --j) {
            auto want = (t(4, j) - c(4, 1)) * delta;
            REQUIRE(minors[4 - j].equal_up_to_unit(want));
        }
    }
    SECTION("minor count is C(n-1, n-k) * C(n, n-k)") {
        auto r = resolve(parse_spec("perm:21435"));
        auto M5 = alexander_matrix(r);
        auto choose = [](int a, int b) {
            long long r = 1;
            for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
            return r;
        };
        for (int k = 1; k <= 5; ++k) {
            auto m = ek_minors(M5, k);
            REQUIRE((long long)m.size() ==
                    (k == 5 ? 1 : choose(4, 5 - k) * choose(5, 5 - k)));
        }
        REQUIRE_THROWS_AS(ek_minors(M5, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(ek_minors(M5, 6), std::invalid_argument);
    }
}

TEST_CASE("alexander polynomials") {
    SECTION("complex arrangements") {
        for (int n = 3; n <= 6; ++n) {
            std::vector<int> id(n);
            std::iota(id.begin(), id.end(), 1);
            auto d = alexander_poly_from_xi(xi_braid(id), n);
            REQUIRE(d.equal_up_to_unit((t(n, n) - c(n, 1)).pow(n - 2)));
            auto l = link_poly_from_alexander(d);
            auto full = LaurentPoly::term(n, Exps(n, 1), 1);
            REQUIRE(l.equal_up_to_unit((full - c(n, 1)).pow(n - 2)));
        }
    }
    SECTION("Hopf pair") {
        auto d = alexander_poly_from_xi(xi_braid({1, 2}), 2);
        REQUIRE(d.equal_up_to_unit(c(2, 1)));
    }
    SECTION("Ziegler in the display basis") {
        auto d = alexander_poly_from_xi(xi_braid({2, 1, 3, 4}), 4, ziegler_basis());
        REQUIRE(d.equal_up_to_unit((t(4, 4) - c(4, 1)) * (t(4, 4) - t(4, 2).pow(2))));
    }
    SECTION("depth-3 chain in its display basis") {
        std::vector<FreeWord> basis{g(5, 1), g(5, 1) * g(5, 2),
                                    g(5, 1) * g(5, 2) * g(5, 3), g(5, 4),
                                    g(5, 4) * g(5, 5)};
        auto d = alexander_poly_from_xi(xi_braid({3, 1, 2, 5, 4, 6}), 6, basis);
        auto want = (t(6, 6) - c(6, 1)) * (t(6, 6) - t(6, 5).pow(2)) *
                    (t(6, 6) - t(6, 3).pow(2)) *
                    (t(6, 6) - t(6, 3).pow(2) * t(6, 2, -2));
        REQUIRE(d.equal_up_to_unit(want));
    }
    SECTION("Mazurovskii K in the stored basis") {
        auto r = resolve(parse_spec("cat:K"));
        auto d = alexander_poly(r, r.display_basis);
        auto want = (t(6, 6) - c(6, 1)) * (t(6, 6) - t(6, 3).pow(2)) *
                    (t(6, 6) - t(6, 4).pow(2)) *
                    (t(6, 6) - t(6, 4).pow(2) * t(6, 3, -2));
        REQUIRE(d.equal_up_to_unit(want));
    }
    SECTION("exact divisibility by t_n - 1") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 8; ++trial) {
            int strands = 2 + trial % 3;
            auto xi = random_pure(rng, strands, 3);
            REQUIRE_NOTHROW(alexander_poly_from_xi(xi, strands + 1));
        }
    }
}

TEST_CASE("full Artin presentation route") {
    SECTION("complex arrangement full twist") {
        const int n = 5;
        BraidWord beta = garside(n) * garside(n);
        auto J = artin_alexander_matrix(beta);
        auto l = link_poly_from_artin(J, n, n);
        auto full = LaurentPoly::term(n, Exps(n, 1), 1);
        REQUIRE(l.equal_up_to_unit((full - c(n, 1)).pow(n - 2)));
    }
    SECTION("Hopf link") {
        BraidWord b(2, {{1, 1}, {1, 1}});
        auto J = artin_alexander_matrix(b);
        REQUIRE(link_poly_from_artin(J, 2, 2).equal_up_to_unit(c(2, 1)));
    }
    SECTION("agrees with the substitution route, all deletions") {
        for (auto& perm : std::vector<std::vector<int>>{
                 {2, 1, 3, 4}, {2, 1, 4, 3, 5}, {3, 1, 4, 2, 5}}) {
            int n = (int)perm.size();
            auto sub_route =
                link_poly_from_alexander(alexander_poly_from_xi(xi_braid(perm), n));
            auto J = artin_alexander_matrix(full_braid(perm));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    REQUIRE(link_poly_from_artin(J, i, j).equal_up_to_unit(sub_route));
        }
    }
    SECTION("non-pure braid rejected") {
        REQUIRE_THROWS_AS(artin_alexander_matrix(BraidWord(3, {{1, 1}})),
                          std::invalid_argument);
    }
}

TEST_CASE("single-variable polynomial and delta") {
    SECTION("complex arrangements: (t-1)(t^n-1)^{n-2}") {
        for (int n = 3; n <= 6; ++n) {
            std::vector<int> id(n);
            std::iota(id.begin(), id.end(), 1);
            auto lp = link_poly_from_alexander(alexander_poly_from_xi(xi_braid(id), n));
            auto sv = single_var_from_link_poly(lp);
            auto want = (t(1, 1) - c(1, 1)) * (t(1, 1, n) - c(1, 1)).pow(n - 2);
            REQUIRE(sv.equal_up_to_unit(want));
            REQUIRE(delta_from_single_var(sv) == (n % 2 == 0 ? 1 : 0));
        }
    }
    SECTION("A(31425): (t-1)^4 (4t^2-t+4), delta = 0") {
        auto lp = link_poly_from_alexander(
            alexander_poly_from_xi(xi_braid({3, 1, 4, 2, 5}), 5));
        auto sv = single_var_from_link_poly(lp);
        auto quad = c(1, 4) * t(1, 1, 2) - t(1, 1) + c(1, 4);
        REQUIRE(sv.equal_up_to_unit((t(1, 1) - c(1, 1)).pow(4) * quad));
        REQUIRE(delta_from_single_var(sv) == 0);
    }
}
