#include "polycert/families.hpp"

#include <cassert>
#include <stdexcept>

namespace polycert {

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::power: return "POWER";
        case FamilyTag::f2: return "F2";
        case FamilyTag::f3: return "F3";
        case FamilyTag::f4: return "F4";
        case FamilyTag::bessel_trunc: return "BESSEL_TRUNC";
        case FamilyTag::sin_catalog: return "SIN";
        case FamilyTag::exp_catalog: return "EXP";
        case FamilyTag::tan_catalog: return "TAN";
    }
    return "?";
}

Poly hn_coeffs(int n) {
    if (n < 1) throw std::invalid_argument("hn_coeffs: n must be >= 1");
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    unsigned long un = static_cast<unsigned long>(n);
    for (unsigned long k = 0; k < un; ++k) {
        Int num = factorial(un - 1) * factorial(un + 1 + k);
        Int den = factorial(k) * factorial(un - k - 1) * factorial(k + 1);
        Int b;
        mpz_divexact(b.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Int two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, un - 1 - k);
        b *= two_pow;
        if ((un - 1 - k) % 2 != 0) b = -b;
        coeffs[k + 1] = Rat(b);
    }
    return Poly::from_coeffs(std::move(coeffs));
}

Poly hn_by_differentiation(int n) {
    if (n < 1) throw std::invalid_argument("hn_by_differentiation: n must be >= 1");
    Poly w_minus = Poly::from_coeffs({Rat(-1), Rat(1)});
    Poly w_plus = Poly::from_coeffs({Rat(1), Rat(1)});
    Poly g = poly_pow(w_minus, static_cast<unsigned>(n - 1)) *
             poly_pow(w_plus, static_cast<unsigned>(n + 1));
    for (int i = 0; i < n; ++i) g = poly_derivative(g);
    assert(poly_compose_affine(g, Rat(1), Rat(-1)) == hn_coeffs(n));
    return g;
}

Poly build_f2(int n) {
    if (n < 2) throw std::invalid_argument("build_f2: n must be >= 2");
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    unsigned long un = static_cast<unsigned long>(n);
    for (unsigned long k = 0; k < un; ++k) {
        Int num = factorial(un - 1) * factorial(k + un - 1);
        Int den = factorial(k) * factorial(un - 1 - k) * factorial(k + 1);
        Int a;
        mpz_divexact(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if ((un - 1 - k) % 2 != 0) a = -a;
        coeffs[k + 1] = Rat(a);
    }
    Poly f = Poly::from_coeffs(std::move(coeffs));
    assert(f == build_f2_by_differentiation(n));
    return f;
}

Poly build_f2_by_differentiation(int n) {
    if (n < 2) throw std::invalid_argument("build_f2_by_differentiation: n must be >= 2");
    Poly z = Poly::variable();
    Poly z_minus = Poly::from_coeffs({Rat(-1), Rat(1)});
    Poly g = poly_pow(z, static_cast<unsigned>(n - 1)) *
             poly_pow(z_minus, static_cast<unsigned>(n - 1));
    for (int i = 0; i < n - 2; ++i) g = poly_derivative(g);
    return g;
}

RatFun build_f3(int n, const Rat& K) {
    if (n < 1) throw std::invalid_argument("build_f3: n must be >= 1");
    if (K == 0 || K == 1) throw std::invalid_argument("build_f3: K must avoid {0, 1}");
    // With u = w + 1 the substitution collapses to u = b(z-1)/z, b = 2K/(K-1).
    Rat b = 2 * K / (K - 1);
    RatFun u(Poly::from_coeffs({-b, b}), Poly::variable());
    RatFun h = poly_eval_ratfun(hn_coeffs(n), u);
    return RatFun(Poly::from_coeffs({-K, Rat(1)})) * h;
}

RatFun build_f4(int n) {
    if (n < 1) throw std::invalid_argument("build_f4: n must be >= 1");
    RatFun u(Poly::from_coeffs({Rat(-2), Rat(2)}), Poly::variable());
    return poly_eval_ratfun(hn_coeffs(n), u);
}

Poly build_bessel_truncation(int terms) {
    if (terms < 1) throw std::invalid_argument("build_bessel_truncation: need at least one term");
    std::vector<Rat> coeffs(static_cast<std::size_t>(terms) + 2, Rat(0));
    for (unsigned long k = 0; k <= static_cast<unsigned long>(terms); ++k) {
        coeffs[k + 1] = make_rat(Int(1), factorial(k) * factorial(k + 1));
    }
    return Poly::from_coeffs(std::move(coeffs));
}

RatFun build_power(int Q) {
    if (Q == 0 || Q == 1) throw std::invalid_argument("build_power: Q must avoid {0, 1}");
    if (Q > 0) return RatFun(Poly::monomial(Rat(1), Q));
    return RatFun(Poly(1L), Poly::monomial(Rat(1), -Q));
}

RatFun apply_frame(const RatFun& g, const Frame& frame) {
    if (frame.a1 == 0 || frame.a2 == 0) {
        throw std::invalid_argument("apply_frame: a1 and a2 must be nonzero");
    }
    Poly num = poly_compose_affine(g.num(), frame.a2, frame.a3);
    Poly den = poly_compose_affine(g.den(), frame.a2, frame.a3);
    return RatFun(num * frame.a1, std::move(den));
}

RatFun build_family(const FamilySpec& spec) {
    RatFun base;
    switch (spec.tag) {
        case FamilyTag::power: base = build_power(spec.Q); break;
        case FamilyTag::f2: base = RatFun(build_f2(spec.n)); break;
        case FamilyTag::f3: base = build_f3(spec.n, spec.K); break;
        case FamilyTag::f4: base = build_f4(spec.n); break;
        case FamilyTag::bessel_trunc: base = RatFun(build_bessel_truncation(spec.terms)); break;
        default:
            throw std::invalid_argument("build_family: " + family_tag_name(spec.tag) +
                                        " is a catalog-only tag");
    }
    return apply_frame(base, spec.frame);
}

}  // namespace polycert
