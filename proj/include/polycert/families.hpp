#ifndef POLYCERT_FAMILIES_HPP
#define POLYCERT_FAMILIES_HPP

#include "polycert/ratfun.hpp"

#include <string>

namespace polycert {

// Canonical solution families. sin/exp/tan are catalog entries only: reports
// can name them but there is no constructor.
enum class FamilyTag { power, f2, f3, f4, bessel_trunc, sin_catalog, exp_catalog, tan_catalog };

std::string family_tag_name(FamilyTag tag);

// Affine normalization frame: g(z) = a1 * f(a2*z + a3), a1*a2 != 0.
struct Frame {
    Rat a1{1};
    Rat a2{1};
    Rat a3{0};
};

struct FamilySpec {
    FamilyTag tag = FamilyTag::power;
    int n = 0;      // f2 (n >= 2), f3/f4 (n >= 1)
    Rat K;          // f3 only, K not in {0, 1}
    int Q = 0;      // power only, Q not in {0, 1}
    int terms = 0;  // bessel_trunc only, >= 1
    Frame frame;
};

// H_n in the shifted basis u = w + 1: sum_{k=0}^{n-1} b_k u^{k+1} with
// b_k = (n-1)!(n+1+k)!(-2)^(n-1-k) / (k!(n-k-1)!(k+1)!). Degree n, H_n(-1)=0.
Poly hn_coeffs(int n);

// H_n(w) = d^n/dw^n [(w-1)^(n-1) (w+1)^(n+1)], in the variable w. Agrees with
// hn_coeffs after the shift w = u - 1.
Poly hn_by_differentiation(int n);

// F2 of degree n: closed-form coefficients a_k = (n-1)!(k+n-1)!(-1)^(n-1-k) /
// (k!(n-1-k)!(k+1)!), cross-checked in debug builds against the derivative
// route d^(n-2)/dz^(n-2) [z^(n-1)(z-1)^(n-1)]. Requires n >= 2.
Poly build_f2(int n);
Poly build_f2_by_differentiation(int n);

// F3 = (z - K) * H_n((K+1)/(K-1) - 2K/((K-1)z)) as a reduced rational
// function with denominator z^n and numerator nonzero at 0.
RatFun build_f3(int n, const Rat& K);

// F4 = H_n(1 - 2/z): pole of order n at 0, simple zero at 1.
RatFun build_f4(int n);

// T_N(z) = sum_{k=0}^{N} z^(k+1) / (k!(k+1)!).
Poly build_bessel_truncation(int terms);

// z^Q with Q not in {0, 1}.
RatFun build_power(int Q);

// a1 * g(a2*z + a3), reduced. Requires a1 != 0 and a2 != 0.
RatFun apply_frame(const RatFun& g, const Frame& frame);

// Builds the family named by spec and applies its frame. Throws for the
// catalog-only tags.
RatFun build_family(const FamilySpec& spec);

}  // namespace polycert

#endif
