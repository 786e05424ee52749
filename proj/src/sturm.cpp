#include "polycert/sturm.hpp"

#include "zpoly.hpp"

#include <stdexcept>

namespace polycert {

SturmChain sturm_chain(const Poly& squarefree_source) {
    if (squarefree_source.is_zero()) {
        throw std::domain_error("Sturm chain of the zero polynomial");
    }
    SturmChain out;
    out.source = squarefree_source;
    out.chain.push_back(squarefree_source);
    if (squarefree_source.is_constant()) return out;
    Poly deriv = poly_derivative(squarefree_source);
    out.chain.push_back(deriv);
    detail::ZPoly prev = detail::zfrom_poly(squarefree_source);
    detail::ZPoly cur = detail::zfrom_poly(deriv);
    while (true) {
        detail::ZPoly next = detail::sturm_next(prev, cur);
        if (next.empty()) break;
        out.chain.push_back(detail::zto_poly(next));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

int sign_variations_at(const SturmChain& chain, const Rat& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain.chain) {
        int s = poly_sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

Rat cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("Cauchy bound of the zero polynomial");
    Rat lead = rat_abs(p.leading());
    Rat best(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rat r = rat_abs(p.coeff(k));
        if (r > best) best = r;
    }
    return 1 + best / lead;
}

namespace {

struct PreparedChain {
    Poly squarefree;
    SturmChain chain;
    Rat bound;
};

PreparedChain prepare(const Poly& p) {
    PreparedChain out;
    out.squarefree = squarefree_part(p);
    out.chain = sturm_chain(out.squarefree);
    out.bound = out.squarefree.is_constant() ? Rat(1) : cauchy_root_bound(out.squarefree);
    return out;
}

// Roots of the square-free source in (lo, hi]. With zero chain entries
// skipped, the variation count V is right-continuous and drops by exactly
// one at each root, so no endpoint perturbation is needed.
int count_on(const PreparedChain& pc, const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) return 0;
    return sign_variations_at(pc.chain, lo) - sign_variations_at(pc.chain, hi);
}

}  // namespace

int count_real_roots(const Poly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (lo.kind == Bound::Kind::pos_inf || hi.kind == Bound::Kind::neg_inf ||
        (lo.finite() && hi.finite() && !(lo.value < hi.value))) {
        throw std::invalid_argument("count_real_roots: endpoints must satisfy lo < hi");
    }
    PreparedChain pc = prepare(p);
    if (pc.squarefree.is_constant()) return 0;
    Rat a = lo.finite() ? lo.value : -pc.bound;
    Rat b = hi.finite() ? hi.value : pc.bound;
    return count_on(pc, a, b);
}

int count_real_roots(const Poly& p, const Rat& lo, const Rat& hi) {
    return count_real_roots(p, Bound::at(lo), Bound::at(hi));
}

int count_real_roots_closed(const Poly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (lo > hi) throw std::invalid_argument("count_real_roots: endpoints must satisfy lo <= hi");
    PreparedChain pc = prepare(p);
    if (pc.squarefree.is_constant()) return 0;
    int at_lo = poly_sign_at(pc.squarefree, lo) == 0 ? 1 : 0;
    if (lo == hi) return at_lo;
    return count_on(pc, lo, hi) + at_lo;
}

int count_real_roots_halfopen(const Poly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("count_real_roots: endpoints must satisfy lo < hi");
    PreparedChain pc = prepare(p);
    if (pc.squarefree.is_constant()) return 0;
    int at_lo = poly_sign_at(pc.squarefree, lo) == 0 ? 1 : 0;
    int at_hi = poly_sign_at(pc.squarefree, hi) == 0 ? 1 : 0;
    return count_on(pc, lo, hi) + at_lo - at_hi;
}

RealRootsCertificate certify_all_roots_real(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("certify_all_roots_real: zero polynomial");
    RealRootsCertificate cert;
    Poly sf = squarefree_part(p);
    cert.squarefree_degree = sf.degree();
    cert.chain = sturm_chain(sf);
    if (sf.is_constant()) {
        cert.distinct_real_roots = 0;
        cert.all_real = true;
        return cert;
    }
    Rat bound = cauchy_root_bound(sf);
    cert.distinct_real_roots =
        sign_variations_at(cert.chain, -bound) - sign_variations_at(cert.chain, bound);
    cert.all_real = cert.distinct_real_roots == cert.squarefree_degree;
    return cert;
}

namespace {

void isolate_rec(const PreparedChain& pc, const Rat& lo, int vlo, const Rat& hi, int vhi,
                 const Rat& max_width, std::vector<RatInterval>& out) {
    int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1 && hi - lo <= max_width) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = (lo + hi) / 2;
    int vmid = sign_variations_at(pc.chain, mid);
    isolate_rec(pc, lo, vlo, mid, vmid, max_width, out);
    isolate_rec(pc, mid, vmid, hi, vhi, max_width, out);
}

}  // namespace

std::vector<RatInterval> isolate_real_roots(const Poly& p, const Rat& max_width) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    if (max_width <= 0) throw std::invalid_argument("isolate_real_roots: width must be positive");
    PreparedChain pc = prepare(p);
    std::vector<RatInterval> out;
    if (pc.squarefree.is_constant()) return out;
    Rat lo = -pc.bound;
    Rat hi = pc.bound;
    isolate_rec(pc, lo, sign_variations_at(pc.chain, lo), hi, sign_variations_at(pc.chain, hi),
                max_width, out);
    return out;
}

}  // namespace polycert
