#ifndef POLYCERT_RATFUN_HPP
#define POLYCERT_RATFUN_HPP

#include "polycert/poly.hpp"

namespace polycert {

// Reduced rational function over Rat: gcd(num, den) = 1 and den is monic.
// The zero function is 0/1. Construction reduces, so every RatFun in
// circulation satisfies the invariants.
class RatFun {
public:
    RatFun() : den_(Poly(1L)) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(Poly(1L)) {}
    RatFun(Poly num, Poly den);
    explicit RatFun(const Rat& c) : num_(Poly(c)), den_(Poly(1L)) {}

    static RatFun variable() { return RatFun(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
    RatFun& operator/=(const RatFun& b) { return *this = *this / b; }

    bool operator==(const RatFun& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

private:
    Poly num_;
    Poly den_;

    friend RatFun ratfun_reduce(Poly num, Poly den);
};

// Cancels the common factor and makes the denominator monic. Throws on a
// zero denominator.
RatFun ratfun_reduce(Poly num, Poly den);

RatFun ratfun_pow(const RatFun& f, long e);

// Evaluates p at a rational-function argument (Horner).
RatFun poly_eval_ratfun(const Poly& p, const RatFun& arg);

// Exact quotient-rule derivative, reduced.
RatFun ratfun_derivative(const RatFun& f);

// f'/f, reduced. Requires f not identically zero.
RatFun log_derivative(const RatFun& f);

// deg num - deg den: the number of zeros minus poles of f, counting
// multiplicity. Requires f nonconstant.
long compute_m(const RatFun& f);

// S = f/f'' when f''/f is zero-free in C, i.e. when the reduced numerator of
// f''/f is a nonzero constant; then 1/(f''/f) is a polynomial. S keeps its
// exact rational leading coefficient.
struct FOverFpp {
    enum class Status { ok, fpp_zero, fpp_over_f_has_zeros };
    Status status = Status::ok;
    Poly s;                     // valid when status == ok
    Poly offending_numerator;   // valid when status == fpp_over_f_has_zeros
};
FOverFpp f_over_fpp(const RatFun& f);

}  // namespace polycert

#endif
