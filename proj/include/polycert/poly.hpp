#ifndef POLYCERT_POLY_HPP
#define POLYCERT_POLY_HPP

#include "polycert/numbers.hpp"

#include <utility>
#include <vector>

namespace polycert {

// Dense univariate polynomial over Rat, coefficients stored by ascending
// degree. The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(long c);

    static Poly from_coeffs(std::vector<Rat> coeffs);
    static Poly variable();
    static Poly monomial(const Rat& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Rat& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly p, const Rat& c) { return p *= c; }
    friend Poly operator*(const Rat& c, Poly p) { return p *= c; }

    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    std::vector<Rat> coeffs_;
    void trim();
};

Poly poly_derivative(const Poly& p);

// Euclidean division over Rat: returns (quotient, remainder) with
// deg remainder < deg den. Throws on zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

// Exact quotient; throws std::domain_error when den does not divide num.
Poly poly_div_exact(const Poly& num, const Poly& den);

// Monic gcd. Throws std::domain_error when both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

// p / gcd(p, p'), monic: same roots as p, all simple. p must be nonzero.
Poly squarefree_part(const Poly& p);

// p(alpha*z + beta), alpha != 0. Degree is preserved.
Poly poly_compose_affine(const Poly& p, const Rat& alpha, const Rat& beta);

Poly poly_pow(const Poly& p, unsigned e);

Poly monic(const Poly& p);

// Splits p as scale * primitive where primitive has coprime integer
// coefficients and a positive leading coefficient. primitive_part(0) is
// {0, 0}.
struct PrimitivePart {
    Rat scale;
    Poly primitive;
};
PrimitivePart primitive_part(const Poly& p);

// Sign of p(x), evaluated homogeneously in integers.
int poly_sign_at(const Poly& p, const Rat& x);

// Multiplicity of the root x in p (0 when p(x) != 0). p must be nonzero.
int root_multiplicity(const Poly& p, const Rat& x);

}  // namespace polycert

#endif
