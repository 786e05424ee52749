#include "polycert/verifier.hpp"

#include <map>
#include <stdexcept>

namespace polycert {

HypothesisReport check_hypotheses(const RatFun& f) {
    if (f.is_constant()) throw std::invalid_argument("check_hypotheses: constant input");
    HypothesisReport report;
    RatFun fp = ratfun_derivative(f);
    report.f_zeros_real = certify_all_roots_real(f.num());
    report.f_poles_real = certify_all_roots_real(f.den());
    report.fprime_zeros_real = certify_all_roots_real(fp.num());
    report.fprime_poles_real = certify_all_roots_real(fp.den());
    FOverFpp s = f_over_fpp(f);
    switch (s.status) {
        case FOverFpp::Status::ok:
            report.fpp_over_f_zero_free = true;
            // S = f/f'' carries the constant numerator of f''/f in its
            // leading coefficient (S = den(f''/f)/c with monic den).
            report.fpp_over_f_numerator = Poly(1 / s.s.leading());
            break;
        case FOverFpp::Status::fpp_zero:
            report.fpp_defined = false;
            report.fpp_over_f_zero_free = false;
            break;
        case FOverFpp::Status::fpp_over_f_has_zeros:
            report.fpp_over_f_zero_free = false;
            report.fpp_over_f_numerator = s.offending_numerator;
            break;
    }
    report.overall = report.f_zeros_real.all_real && report.f_poles_real.all_real &&
                     report.fprime_zeros_real.all_real && report.fprime_poles_real.all_real &&
                     report.fpp_over_f_zero_free;
    return report;
}

RealRootsCertificate fpp_real_rooted(const RatFun& f) {
    RatFun fpp = ratfun_derivative(ratfun_derivative(f));
    if (fpp.is_zero()) {
        RealRootsCertificate cert;
        cert.all_real = true;
        cert.chain.source = Poly(1L);
        cert.chain.chain = {Poly(1L)};
        return cert;
    }
    return certify_all_roots_real(fpp.num());
}

RatFun ode_residual(const RatFun& f, const OdeIdentity& ode) {
    RatFun fpp = ratfun_derivative(ratfun_derivative(f));
    return RatFun(ode.coefficient) * fpp - RatFun(Poly(ode.constant)) * f;
}

namespace {

LocationCheck containment(const std::string& what, const Poly& p, const Rat& lo, const Rat& hi,
                          bool closed_left, int expected) {
    LocationCheck check;
    check.description = what;
    check.expected = expected;
    int total = count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
    int inside = closed_left ? count_real_roots_closed(p, lo, hi)
                             : count_real_roots(p, lo, hi);
    check.found = inside;
    check.ok = (inside == expected) && (total == expected);
    return check;
}

}  // namespace

LocationReport check_zero_locations(const FamilySpec& spec, const RatFun& g) {
    if (spec.tag != FamilyTag::f2 && spec.tag != FamilyTag::f3 && spec.tag != FamilyTag::f4 &&
        spec.tag != FamilyTag::bessel_trunc) {
        throw std::invalid_argument("check_zero_locations: unsupported family " +
                                    family_tag_name(spec.tag));
    }
    // The location claims are stated for the canonical member, so validate
    // the instance against the full spec (frame included) and certify on
    // the frameless build.
    if (build_family(spec) != g) {
        throw std::invalid_argument("check_zero_locations: instance does not match the spec");
    }
    FamilySpec base = spec;
    base.frame = Frame{};
    RatFun canon = build_family(base);

    LocationReport report;
    switch (spec.tag) {
        case FamilyTag::f2: {
            Poly cp = poly_derivative(canon.num());
            report.checks.push_back(
                containment("zeros of g in [0,1]", canon.num(), Rat(0), Rat(1), true, spec.n));
            report.checks.push_back(
                containment("zeros of g' in [0,1]", cp, Rat(0), Rat(1), true, spec.n - 1));
            break;
        }
        case FamilyTag::f3: {
            Rat bound = cauchy_root_bound(canon.num());
            report.checks.push_back(containment("numerator roots in (0, +inf)", canon.num(),
                                                Rat(0), bound, false, spec.n + 1));
            break;
        }
        case FamilyTag::f4: {
            RatFun cp = ratfun_derivative(canon);
            Rat bound_g = cauchy_root_bound(canon.num());
            Rat bound_gp = cauchy_root_bound(cp.num());
            report.checks.push_back(containment("zeros of g in [1, +inf)", canon.num(), Rat(1),
                                                bound_g, true, spec.n));
            report.checks.push_back(containment("zeros of g' in [1, +inf)", cp.num(), Rat(1),
                                                bound_gp, true, spec.n - 1));
            break;
        }
        case FamilyTag::bessel_trunc: {
            LocationCheck check;
            check.description = "real roots of T_N in (-inf, 0]";
            Rat bound = cauchy_root_bound(canon.num());
            check.expected = 0;
            check.found = count_real_roots(canon.num(), Rat(0), bound);
            check.ok = check.found == 0;
            report.checks.push_back(check);
            break;
        }
        default: break;
    }
    report.ok = true;
    for (const auto& c : report.checks) report.ok = report.ok && c.ok;
    return report;
}

Poly bessel_truncation_residual(int N) {
    if (N < 1) throw std::invalid_argument("bessel_truncation_residual: N must be >= 1");
    Poly t = build_bessel_truncation(N);
    Poly z = Poly::variable();
    return z * poly_derivative(poly_derivative(t)) - t;
}

RatInterval f4_eval_certified(const Rat& x, const Rat& abs_tol) {
    if (abs_tol <= 0) throw std::invalid_argument("f4_eval_certified: tolerance must be positive");
    if (x == 0) return {Rat(0), Rat(0)};
    Rat ax = rat_abs(x);
    Rat sum(0);
    Rat term = x;  // t_k = x^(k+1)/(k!(k+1)!), starting at t_0 = x
    unsigned long k = 0;
    while (true) {
        sum += term;
        // t_{k+1} = t_k * x / ((k+1)(k+2))
        term = term * x / Rat(static_cast<unsigned long>((k + 1) * (k + 2)));
        // For k+1 > N >= 2|x| the term ratio stays below 1/2, so the tail
        // after t_N is at most 2|t_{N+1}|.
        if (Rat(static_cast<long>(k)) >= 2 * ax && 2 * rat_abs(term) < abs_tol) break;
        ++k;
    }
    Rat tail = 2 * rat_abs(term);
    return {sum - tail, sum + tail};
}

namespace {

// Certified sign of f4 at x, refining the tolerance until the enclosure
// excludes zero. Returns 0 only for x == 0.
int f4_sign(const Rat& x) {
    if (x == 0) return 0;
    Rat tol = make_rat(Int(1), Int(1) << 20);
    for (int attempt = 0; attempt < 8; ++attempt) {
        RatInterval box = f4_eval_certified(x, tol);
        if (box.lo > 0) return 1;
        if (box.hi < 0) return -1;
        tol /= 1 << 30;
    }
    throw std::runtime_error("f4_sign: cannot separate f4(x) from zero");
}

}  // namespace

F4RootBrackets f4_negative_roots(const Rat& search_bound, int count) {
    if (search_bound <= 0) {
        throw std::invalid_argument("f4_negative_roots: search bound must be positive");
    }
    if (count < 0) throw std::invalid_argument("f4_negative_roots: count must be non-negative");
    F4RootBrackets out;
    if (count == 0) {
        out.complete = true;
        return out;
    }

    std::map<Rat, int> cache;
    auto sign_of = [&cache](const Rat& x) {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        int s = f4_sign(x);
        cache.emplace(x, s);
        return s;
    };

    const Rat min_step = make_rat(Int(1), Int(1) << 20);
    // Consecutive negative roots are separated by more than the initial
    // step, so the halving is a robustness guard; the budget keeps an
    // exhaustive no-roots scan from grinding through millions of points.
    const std::size_t eval_budget = 1u << 18;
    Rat step = make_rat(Int(1), Int(4));
    std::vector<RatInterval> brackets;
    while (true) {
        brackets.clear();
        Rat hi(0);
        // f4(x) = x(1 + x/2 + ...) is negative immediately left of 0.
        int sign_hi = -1;
        while (hi - step >= -search_bound && static_cast<int>(brackets.size()) < count) {
            Rat lo = hi - step;
            int sign_lo = sign_of(lo);
            if (sign_lo != 0 && sign_hi != 0 && sign_lo != sign_hi) {
                brackets.push_back({lo, hi});
            }
            hi = lo;
            sign_hi = sign_lo;
        }
        if (static_cast<int>(brackets.size()) >= count || step <= min_step ||
            cache.size() > eval_budget) {
            break;
        }
        step /= 2;
    }

    const Rat width = make_rat(Int(1), Int(1000000));
    for (auto& bracket : brackets) {
        Rat lo = bracket.lo;
        Rat hi = bracket.hi;
        int sign_lo = f4_sign(lo);
        while (hi - lo > width) {
            Rat mid = (lo + hi) / 2;
            int sign_mid = f4_sign(mid);
            if (sign_mid == sign_lo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.intervals.push_back({lo, hi});
    }
    out.complete = static_cast<int>(out.intervals.size()) >= count;
    return out;
}

}  // namespace polycert
