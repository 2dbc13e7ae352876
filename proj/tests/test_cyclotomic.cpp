#include <skewlink/cyclotomic.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using namespace skewlink;

namespace {

std::complex<double> to_complex(const CyclotomicValue& v) {
    const double pi = 3.14159265358979323846;
    std::complex<double> z = 0;
    for (int a = 0; a < v.order(); ++a) {
        double ang = 2 * pi * a / v.order();
        z += (double)v.coords()[a].convert_to<long long>() *
             std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

CyclotomicValue random_value(std::mt19937& rng, int p, int bound) {
    std::uniform_int_distribution<int> co(-bound, bound);
    CyclotomicValue v(p);
    for (int a = 0; a < p; ++a) v += CyclotomicValue::root_power(p, a, co(rng));
    return v;
}

}  // namespace

TEST_CASE("prime-only orders") {
    REQUIRE_THROWS_AS(CyclotomicValue(4), std::invalid_argument);
    REQUIRE_THROWS_AS(CyclotomicValue(1), std::invalid_argument);
    REQUIRE_NOTHROW(CyclotomicValue(2));
    REQUIRE_NOTHROW(CyclotomicValue(7));
}

TEST_CASE("zero test is the equal-coordinates test") {
    // 1 + zeta + ... + zeta^{p-1} = 0
    for (int p : {2, 3, 5}) {
        CyclotomicValue s(p);
        for (int a = 0; a < p; ++a) s += CyclotomicValue::root_power(p, a);
        REQUIRE(s.is_zero());
        REQUIRE_FALSE(CyclotomicValue::integer(p, 1).is_zero());
    }
}

TEST_CASE("zero test agrees with floating-point evaluation") {
    std::mt19937 rng(4242);
    for (int p : {2, 3, 5}) {
        for (int trial = 0; trial < 200; ++trial) {
            auto v = random_value(rng, p, 1000);
            bool exact = v.is_zero();
            bool approx = std::abs(to_complex(v)) < 1e-9 * 1000 * p;
            REQUIRE(exact == approx);
        }
    }
}

TEST_CASE("eval_torsion basics") {
    SECTION("a nonzero constant never vanishes") {
        auto one = LaurentPoly::constant(3, 1);
        for (int p : {2, 3}) {
            REQUIRE_FALSE(eval_torsion(one, p, {0, 0, 0}).is_zero());
            REQUIRE_FALSE(eval_torsion(one, p, {1, 0, p - 1}).is_zero());
        }
    }
    SECTION("t1 t2 - 1 vanishes at (-1, -1)") {
        auto p = LaurentPoly::term(2, {1, 1}, 1) - LaurentPoly::constant(2, 1);
        REQUIRE(eval_torsion(p, 2, {1, 1}).is_zero());
        REQUIRE_FALSE(eval_torsion(p, 2, {1, 0}).is_zero());
    }
    SECTION("composite p rejected") {
        auto p = LaurentPoly::constant(2, 1);
        REQUIRE_THROWS_AS(eval_torsion(p, 6, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("eval_torsion is a ring homomorphism") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> ex(-3, 3);
    std::uniform_int_distribution<int> co(-5, 5);
    auto random_poly = [&](int nv) {
        LaurentPoly f(nv);
        for (int i = 0; i < 6; ++i) {
            Exps e(nv);
            for (auto& x : e) x = ex(rng);
            f.add_term(e, co(rng));
        }
        return f;
    };
    for (int p : {2, 3, 5}) {
        std::uniform_int_distribution<int> res(0, p - 1);
        for (int trial = 0; trial < 40; ++trial) {
            auto f = random_poly(2), g = random_poly(2);
            std::vector<int> pt{res(rng), res(rng)};
            auto lhs_m = eval_torsion(f * g, p, pt);
            auto rhs_m = eval_torsion(f, p, pt) * eval_torsion(g, p, pt);
            REQUIRE(lhs_m == rhs_m);
            auto lhs_a = eval_torsion(f + g, p, pt);
            auto rhs_a = eval_torsion(f, p, pt) + eval_torsion(g, p, pt);
            REQUIRE(lhs_a == rhs_a);
        }
    }
}
