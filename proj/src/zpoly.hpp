#ifndef POLYCERT_SRC_ZPOLY_HPP
#define POLYCERT_SRC_ZPOLY_HPP

// Internal integer-polynomial layer shared by the gcd and Sturm machinery.
// Dense ascending mpz coefficients with no trailing zeros.

#include "polycert/poly.hpp"

#include <utility>
#include <vector>

namespace polycert::detail {

using ZPoly = std::vector<Int>;

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides by the positive content; the sign pattern is preserved.
inline void zstrip_content(ZPoly& p) {
    if (p.empty()) return;
    Int g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators and strips content: the result is a positive rational
// multiple of p.
inline ZPoly zfrom_poly(const Poly& p) {
    Int lcm(1);
    for (const auto& c : p.coeffs()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(Int(c.get_num() * (lcm / c.get_den())));
    }
    zstrip_content(out);
    return out;
}

inline Poly zto_poly(const ZPoly& p) {
    std::vector<Rat> out;
    out.reserve(p.size());
    for (const auto& c : p) out.emplace_back(c);
    return Poly::from_coeffs(std::move(out));
}

// Pseudo-remainder prem(a, b) = rem(lc(b)^(deg a - deg b + 1) * a, b),
// computed entirely over the integers. Requires b nonzero.
inline ZPoly zprem(ZPoly rem, const ZPoly& den) {
    const Int& lead = den.back();
    int dr = static_cast<int>(rem.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    // R <- lead*R - c*z^(k-dd)*B for k = dr..dd, so the overall multiplier
    // is exactly lead^(dr-dd+1).
    for (int k = dr; k >= dd; --k) {
        Int c = rem[static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j) rem[static_cast<std::size_t>(j)] *= lead;
        if (c != 0) {
            for (int j = 0; j < dd; ++j) {
                rem[static_cast<std::size_t>(k - dd + j)] -= c * den[static_cast<std::size_t>(j)];
            }
        }
        rem[static_cast<std::size_t>(k)] = 0;
    }
    ztrim(rem);
    return rem;
}

// Primitive, sign-true next Sturm entry: -rem(a, b) scaled by a positive
// rational factor.
inline ZPoly sturm_next(const ZPoly& a, const ZPoly& b) {
    int delta = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    ZPoly r = zprem(a, b);
    zstrip_content(r);
    // prem multiplied a by lc(b)^delta; flip so the result is a positive
    // multiple of -rem(a, b).
    bool negative_multiplier = sgn(b.back()) < 0 && (delta % 2 != 0);
    if (!negative_multiplier) {
        for (auto& c : r) c = -c;
    }
    return r;
}

}  // namespace polycert::detail

#endif
