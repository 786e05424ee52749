#ifndef POLYCERT_VERIFIER_HPP
#define POLYCERT_VERIFIER_HPP

#include "polycert/families.hpp"
#include "polycert/sturm.hpp"

#include <string>
#include <vector>

namespace polycert {

// Exact verdict on the real-rootedness hypotheses: f and f' must have only
// real zeros and poles while f''/f is zero-free. Failures are reported, never
// thrown.
struct HypothesisReport {
    RealRootsCertificate f_zeros_real;
    RealRootsCertificate f_poles_real;
    RealRootsCertificate fprime_zeros_real;
    RealRootsCertificate fprime_poles_real;
    bool fpp_over_f_zero_free = false;
    Poly fpp_over_f_numerator;  // reduced numerator of f''/f (the witness)
    bool fpp_defined = true;    // false when f'' == 0
    bool overall = false;
};

// Requires f nonconstant.
HypothesisReport check_hypotheses(const RatFun& f);

// Direct real-rootedness of num(f''); a conclusion for the solution
// families, checked independently of the ODE.
RealRootsCertificate fpp_real_rooted(const RatFun& f);

// The identity P(z) y'' = c y.
struct OdeIdentity {
    Poly coefficient;
    Rat constant;
};

// P f'' - c f, reduced; identically zero iff f solves the identity exactly.
RatFun ode_residual(const RatFun& f, const OdeIdentity& ode);

struct LocationCheck {
    std::string description;
    bool ok = false;
    int expected = 0;
    int found = 0;
};

struct LocationReport {
    bool ok = false;
    std::vector<LocationCheck> checks;
};

// Certifies the per-family zero-location claims: F2 zeros of g and g' in
// [0,1]; F3 (K>1) numerator roots in (0,inf) with count n+1; F4 zeros of g
// and g' in [1,inf); BESSEL_TRUNC real roots in (-inf,0]. Throws on a
// family/instance mismatch.
LocationReport check_zero_locations(const FamilySpec& spec, const RatFun& g);

// z T_N'' - T_N, which equals -z^(N+1) / (N!(N+1)!) exactly.
Poly bessel_truncation_residual(int N);

// Rational enclosure of f4(x) = sum_k x^(k+1)/(k!(k+1)!) of width at most
// 2*abs_tol, via partial sums and a geometric tail majorant.
RatInterval f4_eval_certified(const Rat& x, const Rat& abs_tol);

struct F4RootBrackets {
    std::vector<RatInterval> intervals;  // ordered by increasing |root|
    bool complete = false;               // false when fewer sign changes were found
};

// Brackets the first `count` roots of f4 on [-search_bound, 0) by certified
// sign changes on a refining grid, bisecting each bracket to width 1e-6.
F4RootBrackets f4_negative_roots(const Rat& search_bound, int count);

}  // namespace polycert

#endif
