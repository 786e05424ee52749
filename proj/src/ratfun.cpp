#include "polycert/ratfun.hpp"

#include <stdexcept>

namespace polycert {

RatFun::RatFun(Poly num, Poly den) {
    RatFun reduced = ratfun_reduce(std::move(num), std::move(den));
    num_ = std::move(reduced.num_);
    den_ = std::move(reduced.den_);
}

RatFun ratfun_reduce(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFun out;
    if (num.is_zero()) return out;
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_div_exact(num, g);
        den = poly_div_exact(den, g);
    }
    Rat scale = 1 / den.leading();
    out.num_ = num * scale;
    out.den_ = den * scale;
    return out;
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return ratfun_reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return ratfun_reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return ratfun_reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    return ratfun_reduce(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun ratfun_pow(const RatFun& f, long e) {
    if (e < 0) {
        if (f.is_zero()) throw std::domain_error("division by the zero function");
        return ratfun_pow(RatFun(f.den(), f.num()), -e);
    }
    RatFun result(Poly(1L));
    RatFun base = f;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) result *= base;
        base *= base;
        k >>= 1ul;
    }
    return result;
}

RatFun poly_eval_ratfun(const Poly& p, const RatFun& arg) {
    RatFun acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * arg + RatFun(*it);
    }
    return acc;
}

RatFun ratfun_derivative(const RatFun& f) {
    Poly np = poly_derivative(f.num());
    Poly dp = poly_derivative(f.den());
    return ratfun_reduce(np * f.den() - f.num() * dp, f.den() * f.den());
}

RatFun log_derivative(const RatFun& f) {
    if (f.is_zero()) throw std::domain_error("logarithmic derivative of the zero function");
    return ratfun_derivative(f) / f;
}

long compute_m(const RatFun& f) {
    if (f.is_constant()) throw std::domain_error("compute_m: constant input");
    return static_cast<long>(f.num().degree()) - static_cast<long>(f.den().degree());
}

FOverFpp f_over_fpp(const RatFun& f) {
    FOverFpp out;
    RatFun fpp = ratfun_derivative(ratfun_derivative(f));
    if (fpp.is_zero()) {
        out.status = FOverFpp::Status::fpp_zero;
        return out;
    }
    RatFun ratio = fpp / f;
    if (ratio.num().degree() > 0) {
        out.status = FOverFpp::Status::fpp_over_f_has_zeros;
        out.offending_numerator = ratio.num();
        return out;
    }
    // 1/(f''/f) = den/constant is entire, hence the polynomial S = f/f''.
    Rat inv = 1 / ratio.num().coeff(0);
    out.s = ratio.den() * inv;
    return out;
}

}  // namespace polycert
