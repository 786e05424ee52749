#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycert/verifier.hpp"
#include "support/util.hpp"

using namespace polycert;
using namespace polycert::testutil;

TEST_CASE("check_hypotheses on the catalog rows") {
    // g2 = 144(z-1)(z-4/3)(z-2)/z^2
    CHECK(check_hypotheses(build_f3(2, Q(2))).overall);
    // z^3
    CHECK(check_hypotheses(RatFun(P({0, 0, 0, 1}))).overall);
    // h1 = 2(z^2-1)/z fails exactly at the zeros of f'
    HypothesisReport h1 = check_hypotheses(build_f3(1, Q(-1)));
    CHECK_FALSE(h1.overall);
    CHECK(h1.f_zeros_real.all_real);
    CHECK(h1.f_poles_real.all_real);
    CHECK_FALSE(h1.fprime_zeros_real.all_real);
    CHECK(h1.fprime_poles_real.all_real);
    CHECK(h1.fpp_over_f_zero_free);
    CHECK_THROWS_AS(check_hypotheses(RatFun(P({5}))), std::invalid_argument);
}

TEST_CASE("check_hypotheses across the families") {
    for (int n = 2; n <= 20; ++n) CHECK(check_hypotheses(RatFun(build_f2(n))).overall);
    for (int n = 1; n <= 20; ++n) CHECK(check_hypotheses(build_f4(n)).overall);
    for (Rat K : {Q(3, 2), Q(2), Q(7)}) {
        for (int n = 1; n <= 20; ++n) CHECK(check_hypotheses(build_f3(n, K)).overall);
    }
    for (int q : {-5, -4, -3, -2, -1, 2, 3, 4, 5}) {
        CHECK(check_hypotheses(build_power(q)).overall);
    }
}

TEST_CASE("odd and even K = -1 rows differ") {
    // h2, h4 pass everything including f'' real-rootedness
    for (int n : {2, 4}) {
        RatFun h = build_f3(n, Q(-1));
        CHECK(check_hypotheses(h).overall);
        CHECK(fpp_real_rooted(h).all_real);
    }
    // h1 fails at f' zeros; h3 fails at f' zeros as well, while its f'' is
    // real-rooted (numerator 288(z^2 - 5))
    RatFun h3 = build_f3(3, Q(-1));
    HypothesisReport r3 = check_hypotheses(h3);
    CHECK_FALSE(r3.overall);
    CHECK_FALSE(r3.fprime_zeros_real.all_real);
    CHECK(r3.f_zeros_real.all_real);
    CHECK(fpp_real_rooted(h3).all_real);
    CHECK(fpp_real_rooted(build_f3(1, Q(-1))).all_real);
}

TEST_CASE("ode_residual examples") {
    // g1 solves z^2(z-1)(z-2) y'' = 4y
    Poly coeff = P({0, 0, 1}) * P({-1, 1}) * P({-2, 1});
    CHECK(ode_residual(build_f3(1, Q(2)), {coeff, Q(4)}).is_zero());
    // F2(3) solves z(z-1) y'' = 6y
    CHECK(ode_residual(RatFun(build_f2(3)), {P({0, -1, 1}), Q(6)}).is_zero());
    // z^3 does not: residual 6z^2(z-1) - 6z^3 = -6z^2
    RatFun res = ode_residual(RatFun(P({0, 0, 0, 1})), {P({0, -1, 1}), Q(6)});
    CHECK(res == RatFun(P({0, 0, -6})));
}

TEST_CASE("ode identities hold across the families") {
    for (int n = 2; n <= 15; ++n) {
        CHECK(ode_residual(RatFun(build_f2(n)), {P({0, -1, 1}), Q(n * (n - 1))}).is_zero());
    }
    for (int n = 1; n <= 10; ++n) {
        for (Rat K : {Q(2), Q(3, 2), Q(7), Q(-1), Q(1, 3)}) {
            Poly coeff = P({0, 0, 1}) * P({-1, 1}) * Poly::from_coeffs({-K, Q(1)});
            CHECK(ode_residual(build_f3(n, K), {coeff, K * Q(n * (n + 1))}).is_zero());
        }
        Poly coeff4 = P({0, 0, 1}) * P({-1, 1});
        CHECK(ode_residual(build_f4(n), {coeff4, Q(-n * (n + 1))}).is_zero());
    }
}

TEST_CASE("zero locations per family") {
    FamilySpec f2spec{FamilyTag::f2, 5};
    LocationReport f2rep = check_zero_locations(f2spec, RatFun(build_f2(5)));
    CHECK(f2rep.ok);
    REQUIRE(f2rep.checks.size() == 2);
    CHECK(f2rep.checks[0].found == 5);
    CHECK(f2rep.checks[1].found == 4);

    FamilySpec f3spec{FamilyTag::f3, 3, Q(2)};
    LocationReport f3rep = check_zero_locations(f3spec, build_f3(3, Q(2)));
    CHECK(f3rep.ok);
    CHECK(f3rep.checks[0].found == 4);  // n+1 roots in (0, inf)

    FamilySpec f4spec{FamilyTag::f4, 2};
    LocationReport f4rep = check_zero_locations(f4spec, build_f4(2));
    CHECK(f4rep.ok);  // zeros {1, 2} in [1, inf)

    FamilySpec bspec;
    bspec.tag = FamilyTag::bessel_trunc;
    bspec.terms = 6;
    LocationReport brep =
        check_zero_locations(bspec, RatFun(build_bessel_truncation(6)));
    CHECK(brep.ok);

    // h2's numerator has a root at -1, outside (0, inf): the K > 1 location
    // claim honestly fails for K = -1
    FamilySpec h2spec{FamilyTag::f3, 2, Q(-1)};
    CHECK_FALSE(check_zero_locations(h2spec, build_f3(2, Q(-1))).ok);

    // framed instances are validated against the spec and certified on the
    // canonical member
    FamilySpec framed = f3spec;
    framed.frame = Frame{Q(3), Q(1, 2), Q(-1)};
    CHECK(check_zero_locations(framed, build_family(framed)).ok);
    CHECK_THROWS_AS(check_zero_locations(framed, build_f3(3, Q(2))), std::invalid_argument);

    CHECK_THROWS_AS(check_zero_locations(f2spec, build_f4(2)), std::invalid_argument);
}

TEST_CASE("bessel truncation residual") {
    CHECK(bessel_truncation_residual(1) == Poly::from_coeffs({Q(0), Q(0), Q(-1, 2)}));
    CHECK(bessel_truncation_residual(2) ==
          Poly::from_coeffs({Q(0), Q(0), Q(0), Q(-1, 12)}));
    for (int n : {3, 5, 10}) {
        Poly expected = Poly::monomial(-make_rat(Int(1), factorial(n) * factorial(n + 1)), n + 1);
        CHECK(bessel_truncation_residual(n) == expected);
    }
    // index-shift identity: z T_N'' = T_{N-1}
    for (int n : {2, 5, 9}) {
        Poly t = build_bessel_truncation(n);
        CHECK(Poly::variable() * poly_derivative(poly_derivative(t)) ==
              build_bessel_truncation(n - 1));
    }
    CHECK_THROWS_AS(bessel_truncation_residual(0), std::invalid_argument);
}

TEST_CASE("f4 certified evaluation") {
    RatInterval zero = f4_eval_certified(Q(0), Q(1, 1000));
    CHECK(zero.lo == 0);
    CHECK(zero.hi == 0);

    // partial-sum oracle at x = 1: S20 is well inside any 1e-9 enclosure
    Rat oracle(0);
    for (unsigned long k = 0; k <= 20; ++k) {
        oracle += make_rat(Int(1), factorial(k) * factorial(k + 1));
    }
    Rat tol = make_rat(Int(1), Int(1000000000));
    RatInterval box = f4_eval_certified(Q(1), tol);
    CHECK(box.lo <= oracle);
    CHECK(oracle <= box.hi);
    CHECK(box.hi - box.lo <= 2 * tol);
    // the series value is 1.590636854637... (digit oracle from partial sums)
    CHECK(rat_abs(oracle - Rat("1590636855/1000000000")) < Q(1, 100000000));

    // sign change past the first root
    RatInterval neg = f4_eval_certified(Q(-4), Q(1, 1000000));
    CHECK(neg.lo > 0);  // f4(-4) is positive, past the sign change at ~ -3.67
    RatInterval close = f4_eval_certified(Q(-1), Q(1, 1000000));
    CHECK(close.hi < 0);

    CHECK_THROWS_AS(f4_eval_certified(Q(1), Q(0)), std::invalid_argument);
}

TEST_CASE("f4 enclosures nest as tolerances shrink") {
    for (Rat x : {Q(1), Q(-7, 2), Q(5), Q(-12)}) {
        RatInterval outer = f4_eval_certified(x, Q(1, 1000));
        RatInterval mid = f4_eval_certified(x, Q(1, 1000000));
        RatInterval inner = f4_eval_certified(x, make_rat(Int(1), Int(1000000000)));
        CHECK(outer.lo <= mid.lo);
        CHECK(mid.lo <= inner.lo);
        CHECK(inner.hi <= mid.hi);
        CHECK(mid.hi <= outer.hi);
    }
}

TEST_CASE("f4 negative roots") {
    F4RootBrackets brackets = f4_negative_roots(Q(16), 2);
    REQUIRE(brackets.complete);
    REQUIRE(brackets.intervals.size() == 2);
    const Rat width = Q(1, 1000000);
    for (const auto& iv : brackets.intervals) CHECK(iv.hi - iv.lo <= width);
    // first root near -3.67049, second near -12.3046
    CHECK(brackets.intervals[0].lo > Q(-368, 100));
    CHECK(brackets.intervals[0].hi < Q(-367, 100));
    CHECK(brackets.intervals[1].lo > Q(-1231, 100));
    CHECK(brackets.intervals[1].hi < Q(-1230, 100));

    // no roots in [-3, 0): f4 is negative on the whole of it
    F4RootBrackets none = f4_negative_roots(Q(3), 1);
    CHECK_FALSE(none.complete);
    CHECK(none.intervals.empty());

    CHECK_THROWS_AS(f4_negative_roots(Q(-1), 1), std::invalid_argument);
}
