#include "polycert/poly.hpp"

#include "zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycert {

namespace {
const Rat kZero(0);
}

Poly::Poly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::variable() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, int k) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
        p.coeffs_.back() = c;
    }
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly::from_coeffs(std::move(out));
}

Poly poly_derivative(const Poly& p) {
    if (p.is_constant()) return Poly();
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) {
        out.push_back(p.coeff(k) * Rat(k));
    }
    return Poly::from_coeffs(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<Rat> rem(num.coeffs());
    std::vector<Rat> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rat(0));
    const Rat& lead = den.leading();
    for (int k = num.degree(); k >= den.degree(); --k) {
        Rat c = rem[static_cast<std::size_t>(k)] / lead;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - den.degree())] = c;
        for (int j = 0; j <= den.degree(); ++j) {
            rem[static_cast<std::size_t>(k - den.degree() + j)] -= c * den.coeff(j);
        }
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly poly_div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

namespace {

detail::ZPoly zgcd(detail::ZPoly a, detail::ZPoly b) {
    while (!b.empty()) {
        detail::ZPoly r = detail::zprem(std::move(a), b);
        detail::zstrip_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (p.is_zero()) return monic(q);
    if (q.is_zero()) return monic(p);
    detail::ZPoly a = detail::zfrom_poly(p);
    detail::ZPoly b = detail::zfrom_poly(q);
    if (a.size() < b.size()) std::swap(a, b);
    return monic(detail::zto_poly(zgcd(std::move(a), std::move(b))));
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
    if (p.is_constant()) return Poly(Rat(1));
    Poly g = poly_gcd(p, poly_derivative(p));
    return monic(poly_div_exact(p, g));
}

Poly poly_compose_affine(const Poly& p, const Rat& alpha, const Rat& beta) {
    if (alpha == 0) throw std::domain_error("affine substitution with alpha = 0");
    Poly arg = Poly::from_coeffs({beta, alpha});
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * arg + Poly(*it);
    }
    return acc;
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly result(Rat(1));
    Poly base = p;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    Rat inv = 1 / p.leading();
    return p * inv;
}

PrimitivePart primitive_part(const Poly& p) {
    if (p.is_zero()) return {Rat(0), Poly()};
    detail::ZPoly z = detail::zfrom_poly(p);
    if (sgn(z.back()) < 0) {
        for (auto& c : z) c = -c;
    }
    Poly prim = detail::zto_poly(z);
    Rat scale = p.leading() / prim.leading();
    return {scale, prim};
}

int poly_sign_at(const Poly& p, const Rat& x) {
    if (p.is_zero()) return 0;
    detail::ZPoly z = detail::zfrom_poly(p);
    const Int& xn = x.get_num();
    const Int& xd = x.get_den();
    // Homogeneous Horner: acc = sum c_i * xn^i * xd^(d-i). Since xd > 0,
    // the sign equals that of p(x).
    Int acc = z.back();
    Int dpow(1);
    for (int i = static_cast<int>(z.size()) - 2; i >= 0; --i) {
        dpow *= xd;
        acc = acc * xn + z[static_cast<std::size_t>(i)] * dpow;
    }
    return sgn(acc);
}

int root_multiplicity(const Poly& p, const Rat& x) {
    if (p.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial");
    Poly factor = Poly::from_coeffs({-x, Rat(1)});
    Poly cur = p;
    int mult = 0;
    while (!cur.is_zero() && cur(x) == 0) {
        cur = poly_div_exact(cur, factor);
        ++mult;
    }
    return mult;
}

}  // namespace polycert
