#ifndef POLYCERT_STURM_HPP
#define POLYCERT_STURM_HPP

#include "polycert/poly.hpp"

#include <vector>

namespace polycert {

// Interval endpoint: a finite rational or one of the two infinities.
struct Bound {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind = Kind::finite;
    Rat value;

    static Bound neg_inf() { return {Kind::neg_inf, Rat(0)}; }
    static Bound pos_inf() { return {Kind::pos_inf, Rat(0)}; }
    static Bound at(Rat v) { return {Kind::finite, std::move(v)}; }
    bool finite() const { return kind == Kind::finite; }
};

// Signed-remainder chain of a square-free polynomial: chain[0] is the source,
// chain[1] its derivative, and each later entry equals the negated remainder
// of the two preceding ones up to a positive rational factor (pseudo-remainder
// with content stripping keeps coefficients small). For square-free input the
// chain ends in a nonzero constant.
struct SturmChain {
    Poly source;
    std::vector<Poly> chain;
};

// Requires a nonconstant square-free source.
SturmChain sturm_chain(const Poly& squarefree_source);

// Sign variations of the chain at x, zero entries skipped.
int sign_variations_at(const SturmChain& chain, const Rat& x);

// Every root of p has |root| < 1 + max_i |c_i| / |c_deg|.
Rat cauchy_root_bound(const Poly& p);

// Number of distinct real roots of p in (lo, hi]. Infinite endpoints are
// replaced by the Cauchy bound of the square-free part. Requires p nonzero
// and lo < hi.
int count_real_roots(const Poly& p, const Bound& lo, const Bound& hi);
int count_real_roots(const Poly& p, const Rat& lo, const Rat& hi);

// Distinct real roots in the closed interval [lo, hi].
int count_real_roots_closed(const Poly& p, const Rat& lo, const Rat& hi);

// Distinct real roots in [lo, hi).
int count_real_roots_halfopen(const Poly& p, const Rat& lo, const Rat& hi);

struct RealRootsCertificate {
    bool all_real = false;
    int distinct_real_roots = 0;
    int squarefree_degree = 0;
    SturmChain chain;
};

// all_real is true iff the square-free part of p has as many distinct real
// roots as its degree. The chain is retained for audit.
RealRootsCertificate certify_all_roots_real(const Poly& p);

struct RatInterval {
    Rat lo;
    Rat hi;
};

// Disjoint intervals (lo, hi], one per distinct real root of p, each of width
// at most max_width, in ascending order. Requires p nonzero, max_width > 0.
std::vector<RatInterval> isolate_real_roots(const Poly& p, const Rat& max_width);

}  // namespace polycert

#endif
