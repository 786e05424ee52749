#ifndef POLYCERT_TESTS_SUPPORT_UTIL_HPP
#define POLYCERT_TESTS_SUPPORT_UTIL_HPP

#include "polycert/poly.hpp"
#include "polycert/ratfun.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace polycert::testutil {

inline Poly P(std::initializer_list<long> ascending) {
    std::vector<Rat> cs;
    for (long c : ascending) cs.emplace_back(c);
    return Poly::from_coeffs(std::move(cs));
}

inline Rat Q(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Independent term-by-term derivative, kept separate from poly_derivative on
// purpose.
inline Poly oracle_derivative(const Poly& p) {
    std::vector<Rat> out;
    for (int k = 1; k <= p.degree(); ++k) {
        Rat c = p.coeff(k);
        Rat kk(k);
        out.push_back(c * kk);
    }
    return Poly::from_coeffs(std::move(out));
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    }

    Rat small_rat(long span = 6) {
        long num = pick(-span, span);
        long den = pick(1, span);
        return make_rat(Int(num), Int(den));
    }

    Rat nonzero_rat(long span = 6) {
        while (true) {
            Rat r = small_rat(span);
            if (r != 0) return r;
        }
    }
};

// Product of random linear and irreducible quadratic factors; reports the
// number of distinct real roots of the product.
struct FactoredPoly {
    Poly poly;
    int distinct_real_roots;
};

inline FactoredPoly random_factored_poly(Rng& rng, int max_degree) {
    Poly p(Rat(1));
    std::vector<Rat> roots;
    int degree = 0;
    while (degree < max_degree) {
        if (degree + 1 == max_degree || rng.pick(0, 1) == 0) {
            Rat root = rng.small_rat(5);
            int mult = static_cast<int>(rng.pick(1, 2));
            for (int i = 0; i < mult && degree < max_degree; ++i) {
                p = p * Poly::from_coeffs({-root, Rat(1)});
                ++degree;
            }
            roots.push_back(root);
        } else {
            // z^2 + bz + c with b^2 - 4c = -4t^2 < 0: no real roots.
            Rat b = rng.small_rat(4);
            Rat t = rng.nonzero_rat(4);
            Rat c = b * b / 4 + t * t;
            p = p * Poly::from_coeffs({c, b, Rat(1)});
            degree += 2;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return {p, static_cast<int>(roots.size())};
}

}  // namespace polycert::testutil

#endif
