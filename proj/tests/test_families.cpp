#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycert/families.hpp"
#include "polycert/sturm.hpp"
#include "support/util.hpp"

#include <thread>

using namespace polycert;
using namespace polycert::testutil;

namespace {

// Expands c * (z - r1) * ... * (z - rk) / z^n independently of the builders.
RatFun factored(long c, std::initializer_list<Rat> roots, int pole_order,
                const Poly& extra = Poly(1L)) {
    Poly num{Rat(c)};
    for (const Rat& r : roots) num = num * Poly::from_coeffs({-r, Rat(1)});
    num = num * extra;
    return RatFun(num, Poly::monomial(Rat(1), pole_order));
}

}  // namespace

TEST_CASE("hn closed form") {
    CHECK(hn_coeffs(1) == P({0, 2}));
    CHECK(hn_coeffs(2) == P({0, -12, 12}));
    CHECK(hn_coeffs(3) == P({0, 96, -240, 120}));
    CHECK(hn_coeffs(1).coeff(0) == 0);
    CHECK_THROWS_AS(hn_coeffs(0), std::invalid_argument);
}

TEST_CASE("hn by differentiation") {
    CHECK(hn_by_differentiation(1) == P({2, 2}));
    CHECK(hn_by_differentiation(2) == P({0, 12, 12}));
    CHECK_THROWS_AS(hn_by_differentiation(0), std::invalid_argument);
}

TEST_CASE("hn dual routes agree after the shift") {
    for (int n = 1; n <= 25; ++n) {
        Poly shifted = poly_compose_affine(hn_by_differentiation(n), Q(1), Q(-1));
        CHECK(shifted == hn_coeffs(n));
    }
}

TEST_CASE("hn coefficient recurrence") {
    // b_{k+1}/b_k = (k+1-n)(k+2+n) / (2(k+1)(k+2))
    for (int n = 1; n <= 25; ++n) {
        Poly h = hn_coeffs(n);
        for (int k = 0; k + 1 <= n - 1; ++k) {
            Rat lhs = h.coeff(k + 2) * Rat(2 * (k + 1) * (k + 2));
            Rat rhs = h.coeff(k + 1) * Rat((k + 1 - n) * (k + 2 + n));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("hn solves its differential equation") {
    // in u = w+1: (2-u)u H'' - 2u H' + n(n+1) H = 0
    for (int n = 1; n <= 50; ++n) {
        Poly h = hn_coeffs(n);
        Poly hp = poly_derivative(h);
        Poly hpp = poly_derivative(hp);
        Poly residual = P({0, 2, -1}) * hpp - P({0, 2}) * hp + Rat(n * (n + 1)) * h;
        CHECK(residual.is_zero());
    }
}

TEST_CASE("hn root location") {
    for (int n : {1, 2, 3, 5, 10, 25}) {
        Poly h = hn_coeffs(n);  // roots in u-coordinates live in [0, 2)
        CHECK(h.degree() == n);
        CHECK(squarefree_part(h) == monic(h));
        CHECK(count_real_roots_halfopen(h, Q(0), Q(2)) == n);
        CHECK(h(Q(0)) == 0);
    }
}

TEST_CASE("f2 examples and dual route") {
    CHECK(build_f2(2) == P({0, -1, 1}));
    CHECK(build_f2(3) == P({0, 2, -6, 4}));
    for (int n = 2; n <= 25; ++n) {
        Poly f = build_f2(n);
        CHECK(f == build_f2_by_differentiation(n));
        CHECK(f.degree() == n);
        CHECK(f.coeff(0) == 0);
        CHECK(f.coeff(1) != 0);  // simple zero at 0
    }
    CHECK_THROWS_AS(build_f2(1), std::invalid_argument);
}

TEST_CASE("f2 coefficient recurrence") {
    // a_{k+1}/a_k = -(k+n)(n-1-k) / ((k+1)(k+2))
    for (int n = 2; n <= 25; ++n) {
        Poly f = build_f2(n);
        for (int k = 0; k + 1 <= n - 1; ++k) {
            Rat lhs = f.coeff(k + 2) * Rat((k + 1) * (k + 2));
            Rat rhs = -f.coeff(k + 1) * Rat((k + n) * (n - 1 - k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("f2 satisfies z(z-1) y'' = n(n-1) y") {
    for (int n = 2; n <= 20; ++n) {
        Poly f = build_f2(n);
        Poly fpp = poly_derivative(poly_derivative(f));
        CHECK(P({0, -1, 1}) * fpp == Rat(n * (n - 1)) * f);
    }
}

TEST_CASE("f3 reproduces the K = 2 table") {
    CHECK(build_f3(1, Q(2)) == factored(8, {Q(1), Q(2)}, 1));
    CHECK(build_f3(2, Q(2)) == factored(144, {Q(1), Q(4, 3), Q(2)}, 2));
    CHECK(build_f3(3, Q(2)) == factored(384, {Q(1), Q(2)}, 3, P({20, -30, 11})));
}

TEST_CASE("f3 reproduces the K = -1 table") {
    CHECK(build_f3(1, Q(-1)) == factored(2, {Q(1), Q(-1)}, 1));
    CHECK(build_f3(2, Q(-1)) == factored(-12, {Q(1), Q(-1)}, 2));
    CHECK(build_f3(3, Q(-1)) == factored(-24, {Q(1), Q(-1)}, 3, P({-5, 0, 1})));
    CHECK(build_f3(4, Q(-1)) == factored(720, {Q(1), Q(-1)}, 4, Poly::from_coeffs({Q(-7, 3), Q(0), Q(1)})));
}

TEST_CASE("f3 structure") {
    for (int n = 1; n <= 10; ++n) {
        for (Rat K : {Q(2), Q(3, 2), Q(7), Q(-1), Q(1, 3)}) {
            RatFun f = build_f3(n, K);
            CHECK(f.den() == Poly::monomial(Rat(1), n));
            CHECK(f.num().coeff(0) != 0);
            CHECK(f.num()(Q(1)) == 0);
            CHECK(f.num()(K) == 0);
        }
    }
    CHECK_THROWS_AS(build_f3(0, Q(2)), std::invalid_argument);
    CHECK_THROWS_AS(build_f3(1, Q(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_f3(1, Q(1)), std::invalid_argument);
}

TEST_CASE("f4 reproduces the limiting table") {
    CHECK(build_f4(1) == factored(4, {Q(1)}, 1));
    CHECK(build_f4(2) == factored(24, {Q(1), Q(2)}, 2));
    CHECK(build_f4(3) == factored(192, {Q(1)}, 3, P({5, -5, 1})));
    CHECK_THROWS_AS(build_f4(0), std::invalid_argument);
}

TEST_CASE("f4 is the K -> infinity limit of f3/(-K)") {
    // coefficients of f3(n, K)/(-K) approach those of f4(n) at rate c/K;
    // the constant is frozen from the exact n <= 10 computation, where the
    // largest observed |diff|*K is about 1.64e17
    const Rat big[] = {Q(1000000), Q(10000000)};
    const Rat limit_constant = Rat("200000000000000000");
    for (int n = 1; n <= 10; ++n) {
        RatFun f4 = build_f4(n);
        for (const Rat& K : big) {
            RatFun scaled = build_f3(n, K) * RatFun(Poly(-1 / K));
            CHECK(scaled.den() == f4.den());
            Poly diff = scaled.num() - f4.num();
            for (int k = 0; k <= diff.degree(); ++k) {
                CHECK(rat_abs(diff.coeff(k)) <= limit_constant / K);
            }
        }
    }
}

TEST_CASE("bessel truncation") {
    CHECK(build_bessel_truncation(1) == Poly::from_coeffs({Q(0), Q(1), Q(1, 2)}));
    CHECK(build_bessel_truncation(2) == Poly::from_coeffs({Q(0), Q(1), Q(1, 2), Q(1, 12)}));
    CHECK_THROWS_AS(build_bessel_truncation(0), std::invalid_argument);
}

TEST_CASE("power family") {
    CHECK(build_power(3) == RatFun(P({0, 0, 0, 1})));
    CHECK(build_power(-2) == RatFun(P({1}), P({0, 0, 1})));
    // z^2 satisfies z^2 y'' = Q(Q-1) y = 2y
    RatFun f = build_power(2);
    RatFun fpp = ratfun_derivative(ratfun_derivative(f));
    CHECK(RatFun(P({0, 0, 1})) * fpp == RatFun(P({0, 0, 2})));
    CHECK_THROWS_AS(build_power(0), std::invalid_argument);
    CHECK_THROWS_AS(build_power(1), std::invalid_argument);
}

TEST_CASE("apply_frame") {
    RatFun z2(P({0, 0, 1}));
    CHECK(apply_frame(z2, Frame{Q(1), Q(1), Q(0)}) == z2);
    CHECK(apply_frame(z2, Frame{Q(3), Q(2), Q(1)}) == RatFun(P({3, 12, 12})));

    RatFun g1(P({16, -24, 8}), P({0, 1}));
    // substitute-then-scale: frame (1,1,1) sends z to z+1
    CHECK(apply_frame(g1, Frame{Q(1), Q(1), Q(1)}) ==
          RatFun(P({0, -8, 8}), P({1, 1})));  // 8z(z-1)/(z+1)
    CHECK(apply_frame(g1, Frame{Q(1), Q(1), Q(-1)}) ==
          RatFun(P({48, -40, 8}), P({-1, 1})));  // 8(z-2)(z-3)/(z-1)

    CHECK_THROWS_AS(apply_frame(z2, Frame{Q(0), Q(1), Q(0)}), std::invalid_argument);
    CHECK_THROWS_AS(apply_frame(z2, Frame{Q(1), Q(0), Q(0)}), std::invalid_argument);
}

TEST_CASE("frames invert") {
    Rng rng(54);
    for (int i = 0; i < 100; ++i) {
        RatFun f = build_f3(1 + static_cast<int>(rng.pick(0, 4)), Q(2));
        Frame fr{rng.nonzero_rat(), rng.nonzero_rat(), rng.small_rat()};
        Frame inv{1 / fr.a1, 1 / fr.a2, -fr.a3 / fr.a2};
        CHECK(apply_frame(apply_frame(f, fr), inv) == f);
    }
}

TEST_CASE("build_family dispatch") {
    FamilySpec spec;
    spec.tag = FamilyTag::f4;
    spec.n = 2;
    CHECK(build_family(spec) == build_f4(2));
    spec.tag = FamilyTag::sin_catalog;
    CHECK_THROWS_AS(build_family(spec), std::invalid_argument);
}

TEST_CASE("constructors are safe for concurrent callers") {
    // the factorial memo is the only shared state
    std::vector<std::thread> workers;
    std::vector<Poly> results(8);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([t, &results] { results[static_cast<std::size_t>(t)] = hn_coeffs(40 + t); });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) {
        CHECK(results[static_cast<std::size_t>(t)] == hn_coeffs(40 + t));
    }
}
