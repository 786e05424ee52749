#include "polycert/classifier.hpp"

#include "polycert/ratfun.hpp"

#include <stdexcept>
#include <vector>

namespace polycert {

Rat canonicalize_K(const Rat& K) {
    if (K == 0 || K == 1) throw std::invalid_argument("canonicalize_K: K must avoid {0, 1}");
    if (rat_abs(K) >= 1) return K;
    return 1 / K;
}

std::optional<Rat> recover_frame(const RatFun& input, const RatFun& canonical, const Rat& a2,
                                 const Rat& a3) {
    if (a2 == 0) throw std::invalid_argument("recover_frame: a2 must be nonzero");
    if (canonical.is_zero()) throw std::domain_error("recover_frame: zero canonical function");
    RatFun moved = apply_frame(canonical, Frame{Rat(1), a2, a3});
    if (input.is_zero()) return std::nullopt;
    if (moved.den() != input.den()) return std::nullopt;
    if (moved.num().degree() != input.num().degree()) return std::nullopt;
    Rat a1 = input.num().leading() / moved.num().leading();
    if (moved.num() * a1 != input.num()) return std::nullopt;
    return a1;
}

namespace {

// Rational square root: num and den must both be perfect squares.
std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return make_rat(n, d);
}

// Roots of a quadratic with rational coefficients, when both are rational.
struct QuadraticRoots {
    bool rational = false;
    Rat r1, r2;  // r1 <= r2
};

QuadraticRoots rational_quadratic_roots(const Poly& q) {
    QuadraticRoots out;
    const Rat& a = q.coeff(2);
    const Rat& b = q.coeff(1);
    const Rat& c = q.coeff(0);
    Rat disc = b * b - 4 * a * c;
    auto root = rat_sqrt(disc);
    if (!root) return out;
    out.rational = true;
    out.r1 = (-b - *root) / (2 * a);
    out.r2 = (-b + *root) / (2 * a);
    if (out.r1 > out.r2) std::swap(out.r1, out.r2);
    return out;
}

FamilyMatch no_match(FamilyMatch base, std::string reason) {
    base.matched = false;
    base.exact = false;
    base.no_match_reason = std::move(reason);
    return base;
}

struct Candidate {
    FamilySpec spec;
    bool ok = false;
};

FamilySpec spec_of(FamilyTag tag, int n, Rat K = Rat(), int Q = 0) {
    FamilySpec spec;
    spec.tag = tag;
    spec.n = n;
    spec.K = std::move(K);
    spec.Q = Q;
    return spec;
}

// Tries input == a1 * canonical(a2 z + a3) and fills in the frame.
Candidate try_candidate(const RatFun& input, const RatFun& canonical, FamilySpec spec,
                        const Rat& a2, const Rat& a3) {
    Candidate cand;
    auto a1 = recover_frame(input, canonical, a2, a3);
    if (!a1) return cand;
    cand.ok = true;
    spec.frame = Frame{*a1, a2, a3};
    cand.spec = std::move(spec);
    return cand;
}

int pole_order_at(const RatFun& f, const Rat& x0) { return root_multiplicity(f.den(), x0); }

}  // namespace

FamilyMatch classify(const RatFun& f) {
    if (f.is_constant()) throw std::invalid_argument("classify: constant input");
    FamilyMatch match;
    match.m = compute_m(f);

    FOverFpp s = f_over_fpp(f);
    if (s.status == FOverFpp::Status::fpp_zero) {
        return no_match(match, "f'' vanishes identically (polynomial of degree <= 1)");
    }
    if (s.status == FOverFpp::Status::fpp_over_f_has_zeros) {
        return no_match(match, "f''/f has zeros, so f/f'' is not a polynomial");
    }
    match.s = s.s;
    const Poly& S = match.s;

    Poly mult_part = poly_gcd(S, poly_derivative(S));

    if (S.degree() == 2) {
        if (mult_part.degree() == 1) {
            // one real double zero: the pure power family
            Rat x0 = -mult_part.coeff(0);
            if (match.m == 0 || match.m == 1) {
                return no_match(match, "double zero of f/f'' but m is 0 or 1");
            }
            long q = match.m;
            Rat expected_lead = make_rat(Int(1), Int(q) * Int(q - 1));
            if (S.leading() != expected_lead) {
                return no_match(match, "f/f'' constant does not match Q(Q-1)");
            }
            Candidate cand = try_candidate(f, build_power(static_cast<int>(q)),
                                           spec_of(FamilyTag::power, 0, Rat(), static_cast<int>(q)),
                                           Rat(1), -x0);
            if (!cand.ok) return no_match(match, "not an affine image of z^Q");
            match.matched = true;
            match.exact = true;
            match.spec = cand.spec;
            return match;
        }
        // two simple zeros: polynomial solutions of z(z-1) y'' = n(n-1) y
        auto roots = rational_quadratic_roots(S);
        if (!roots.rational) {
            return no_match(match, "simple zeros of f/f'' are irrational");
        }
        if (!f.is_polynomial()) {
            return no_match(match, "f/f'' has two simple zeros but f has poles");
        }
        int n = f.num().degree();
        if (n < 2) return no_match(match, "polynomial degree below 2");
        Rat c(static_cast<long>(n) * (n - 1));
        Poly expected = Poly::from_coeffs({roots.r1 * roots.r2, -(roots.r1 + roots.r2), Rat(1)});
        if (S * c != expected) {
            return no_match(match, "f/f'' constant does not match n(n-1)");
        }
        RatFun canonical(build_f2(n));
        Rat span = roots.r2 - roots.r1;
        std::vector<Candidate> found;
        for (int orient = 0; orient < 2; ++orient) {
            Rat a2 = orient == 0 ? Rat(1 / span) : Rat(-1 / span);
            Rat a3 = orient == 0 ? Rat(-roots.r1 / span) : Rat(roots.r2 / span);
            Candidate cand = try_candidate(f, canonical, spec_of(FamilyTag::f2, n), a2, a3);
            if (cand.ok) found.push_back(std::move(cand));
        }
        if (found.empty()) return no_match(match, "not an affine image of the F2 family");
        std::size_t best = 0;
        if (found.size() > 1 && found[1].spec.frame.a2 > found[0].spec.frame.a2) best = 1;
        match.matched = true;
        match.exact = true;
        match.spec = found[best].spec;
        return match;
    }

    if (S.degree() == 3) {
        if (mult_part.degree() != 1) {
            return no_match(match, "cubic f/f'' without a double zero");
        }
        Rat x0 = -mult_part.coeff(0);
        Poly sq = Poly::from_coeffs({x0 * x0, -2 * x0, Rat(1)});
        Poly rest = poly_div_exact(S * (1 / S.leading()), sq);
        Rat x1 = -rest.coeff(0);
        int n = pole_order_at(f, x0);
        if (n < 1) return no_match(match, "double zero of f/f'' is not a pole of f");
        // S = a2 (z-x0)^2 (z-x1) / (-n(n+1)) with a2 = 1/(x1-x0)
        Rat a2 = 1 / (x1 - x0);
        Rat c(-static_cast<long>(n) * (n + 1));
        if (S.leading() * c != a2) {
            return no_match(match, "f/f'' constant does not match -n(n+1)");
        }
        Candidate cand =
            try_candidate(f, build_f4(n), spec_of(FamilyTag::f4, n), a2, Rat(-x0 * a2));
        if (!cand.ok) return no_match(match, "not an affine image of the F4 family");
        match.matched = true;
        match.exact = true;
        match.spec = cand.spec;
        return match;
    }

    if (S.degree() == 4) {
        if (mult_part.degree() != 1) {
            return no_match(match, "quartic f/f'' without exactly one double zero");
        }
        Rat x0 = -mult_part.coeff(0);
        Poly sq = Poly::from_coeffs({x0 * x0, -2 * x0, Rat(1)});
        Poly rest = poly_div_exact(S * (1 / S.leading()), sq);
        auto roots = rational_quadratic_roots(rest);
        if (!roots.rational) {
            return no_match(match, "simple zeros of f/f'' are irrational");
        }
        if (roots.r1 == roots.r2) {
            return no_match(match, "quartic f/f'' with two double zeros");
        }
        int n = pole_order_at(f, x0);
        if (n < 1) return no_match(match, "double zero of f/f'' is not a pole of f");
        std::vector<Candidate> found;
        for (int orient = 0; orient < 2; ++orient) {
            Rat to_one = orient == 0 ? roots.r1 : roots.r2;
            Rat other = orient == 0 ? roots.r2 : roots.r1;
            Rat a2 = 1 / (to_one - x0);
            Rat K = (other - x0) / (to_one - x0);
            Rat c = K * Rat(static_cast<long>(n) * (n + 1));
            // S = a2^2 (z-x0)^2 (z-r1)(z-r2) / (K n(n+1))
            if (S.leading() * c != a2 * a2) continue;
            Candidate cand = try_candidate(f, build_f3(n, K), spec_of(FamilyTag::f3, n, K), a2,
                                           Rat(-x0 * a2));
            if (cand.ok) found.push_back(std::move(cand));
        }
        if (found.empty()) return no_match(match, "not an affine image of the F3 family");
        std::size_t best = 0;
        if (found.size() > 1) {
            Rat abs0 = rat_abs(found[0].spec.K);
            Rat abs1 = rat_abs(found[1].spec.K);
            if (abs1 > abs0) {
                best = 1;
            } else if (abs0 == abs1 && found[1].spec.frame.a2 > found[0].spec.frame.a2) {
                best = 1;
            }
        }
        match.matched = true;
        match.exact = true;
        match.spec = found[best].spec;
        return match;
    }

    return no_match(match, "f/f'' has unsupported degree " + std::to_string(S.degree()));
}

}  // namespace polycert
