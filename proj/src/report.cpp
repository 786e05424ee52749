#include "polycert/report.hpp"

#include "polycert/printing.hpp"

#include <json.hpp>

#include <sstream>

namespace polycert {

namespace {

using nlohmann::json;

json certificate_json(const RealRootsCertificate& cert, const Poly& p) {
    json out;
    out["ok"] = cert.all_real;
    out["polynomial"] = poly_to_string(p);
    out["distinct_real_roots"] = cert.distinct_real_roots;
    out["squarefree_degree"] = cert.squarefree_degree;
    out["sturm_chain_length"] = cert.chain.chain.size();
    return out;
}

json intervals_json(const std::vector<RatInterval>& intervals) {
    json out = json::array();
    for (const auto& iv : intervals) {
        out.push_back({{"lo", rat_to_string(iv.lo)}, {"hi", rat_to_string(iv.hi)}});
    }
    return out;
}

json frame_json(const Frame& frame) {
    return {{"a1", rat_to_string(frame.a1)},
            {"a2", rat_to_string(frame.a2)},
            {"a3", rat_to_string(frame.a3)}};
}

json classification_json(const FamilyMatch& match) {
    json out;
    out["matched"] = match.matched;
    out["m"] = match.m;
    if (!match.s.is_zero()) out["S"] = poly_to_string(match.s);
    if (!match.matched) {
        out["family"] = "NO_MATCH";
        out["reason"] = match.no_match_reason;
        return out;
    }
    out["family"] = family_tag_name(match.spec.tag);
    out["exact"] = match.exact;
    switch (match.spec.tag) {
        case FamilyTag::power: out["Q"] = match.spec.Q; break;
        case FamilyTag::f2: out["n"] = match.spec.n; break;
        case FamilyTag::f3:
            out["n"] = match.spec.n;
            out["K"] = rat_to_string(match.spec.K);
            out["K_canonical"] = rat_to_string(canonicalize_K(match.spec.K));
            break;
        case FamilyTag::f4: out["n"] = match.spec.n; break;
        default: break;
    }
    out["frame"] = frame_json(match.spec.frame);
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void classification_text(std::ostringstream& out, const FamilyMatch& match) {
    if (!match.matched) {
        out << "classification: NO_MATCH (" << match.no_match_reason << ")\n";
        return;
    }
    out << "classification: " << family_tag_name(match.spec.tag);
    switch (match.spec.tag) {
        case FamilyTag::power: out << ", Q = " << match.spec.Q; break;
        case FamilyTag::f2: out << ", n = " << match.spec.n; break;
        case FamilyTag::f3:
            out << ", n = " << match.spec.n << ", K = " << rat_to_string(match.spec.K);
            break;
        case FamilyTag::f4: out << ", n = " << match.spec.n; break;
        default: break;
    }
    const Frame& fr = match.spec.frame;
    out << ", frame (a1, a2, a3) = (" << rat_to_string(fr.a1) << ", " << rat_to_string(fr.a2)
        << ", " << rat_to_string(fr.a3) << ")";
    out << ", exact = " << yes_no(match.exact) << "\n";
}

}  // namespace

Report make_report(const std::string& input, const RatFun& f, bool classify_input) {
    Report report;
    report.input = input;
    report.function = f;
    report.m = compute_m(f);
    report.hypotheses = check_hypotheses(f);
    if (classify_input) report.classification = classify(f);
    const Rat width = make_rat(Int(1), Int(64));
    if (!f.num().is_constant()) report.zero_intervals = isolate_real_roots(f.num(), width);
    if (!f.den().is_constant()) report.pole_intervals = isolate_real_roots(f.den(), width);
    return report;
}

bool report_failed(const Report& report) {
    if (!report.hypotheses.overall) return true;
    if (report.classification && !report.classification->matched) return true;
    if (report.ode && !report.ode->solves) return true;
    return false;
}

std::string report_to_json(const Report& report) {
    json out;
    out["format_version"] = kReportFormatVersion;
    out["input"] = report.input;
    out["function"] = ratfun_to_string(report.function);
    out["m"] = report.m;

    json hyp;
    hyp["f_zeros_real"] = certificate_json(report.hypotheses.f_zeros_real, report.function.num());
    hyp["f_poles_real"] = certificate_json(report.hypotheses.f_poles_real, report.function.den());
    RatFun fp = ratfun_derivative(report.function);
    hyp["fprime_zeros_real"] = certificate_json(report.hypotheses.fprime_zeros_real, fp.num());
    hyp["fprime_poles_real"] = certificate_json(report.hypotheses.fprime_poles_real, fp.den());
    hyp["fpp_over_f_zero_free"] = {
        {"ok", report.hypotheses.fpp_over_f_zero_free},
        {"numerator", poly_to_string(report.hypotheses.fpp_over_f_numerator)}};
    hyp["overall"] = report.hypotheses.overall;
    out["hypotheses"] = std::move(hyp);

    out["certificates"] = {{"zero_intervals", intervals_json(report.zero_intervals)},
                           {"pole_intervals", intervals_json(report.pole_intervals)}};

    if (report.classification) out["classification"] = classification_json(*report.classification);
    if (report.ode) {
        out["ode"] = {{"coefficient", poly_to_string(report.ode->ode.coefficient)},
                      {"constant", rat_to_string(report.ode->ode.constant)},
                      {"solves", report.ode->solves},
                      {"residual", ratfun_to_string(report.ode->residual)}};
    }
    return out.dump(2);
}

std::string report_to_text(const Report& report) {
    std::ostringstream out;
    out << "input: " << report.input << "\n";
    out << "function: " << ratfun_to_string(report.function) << "\n";
    out << "m (zeros minus poles): " << report.m << "\n";
    const HypothesisReport& h = report.hypotheses;
    out << "f zeros real: " << yes_no(h.f_zeros_real.all_real) << " ("
        << h.f_zeros_real.distinct_real_roots << " of " << h.f_zeros_real.squarefree_degree
        << " distinct roots real)\n";
    out << "f poles real: " << yes_no(h.f_poles_real.all_real) << " ("
        << h.f_poles_real.distinct_real_roots << " of " << h.f_poles_real.squarefree_degree
        << " distinct roots real)\n";
    out << "f' zeros real: " << yes_no(h.fprime_zeros_real.all_real) << " ("
        << h.fprime_zeros_real.distinct_real_roots << " of "
        << h.fprime_zeros_real.squarefree_degree << " distinct roots real)\n";
    out << "f' poles real: " << yes_no(h.fprime_poles_real.all_real) << " ("
        << h.fprime_poles_real.distinct_real_roots << " of "
        << h.fprime_poles_real.squarefree_degree << " distinct roots real)\n";
    out << "f''/f zero-free: " << yes_no(h.fpp_over_f_zero_free) << " (numerator "
        << poly_to_string(h.fpp_over_f_numerator) << ")\n";
    out << "hypotheses: " << (h.overall ? "PASS" : "FAIL") << "\n";
    if (report.classification) classification_text(out, *report.classification);
    if (report.ode) {
        out << "ode " << poly_to_string(report.ode->ode.coefficient)
            << " * y'' = " << rat_to_string(report.ode->ode.constant)
            << " * y: " << (report.ode->solves ? "solved exactly" : "not a solution")
            << " (residual " << ratfun_to_string(report.ode->residual) << ")\n";
    }
    return out.str();
}

std::string tables_text() {
    std::ostringstream out;
    for (int n = 1; n <= 3; ++n) {
        out << "g" << n << " (n=" << n << ", K=2): " << ratfun_to_string(build_f3(n, Rat(2)))
            << "\n";
    }
    for (int n = 1; n <= 4; ++n) {
        out << "h" << n << " (n=" << n << ", K=-1): " << ratfun_to_string(build_f3(n, Rat(-1)))
            << "\n";
    }
    for (int n = 1; n <= 3; ++n) {
        out << "p" << n << " (n=" << n << "): " << ratfun_to_string(build_f4(n)) << "\n";
    }
    return out.str();
}

std::string roots_to_text(const std::vector<RatInterval>& roots) {
    std::ostringstream out;
    out << roots.size() << " distinct real root(s)\n";
    for (const auto& iv : roots) {
        out << "(" << rat_to_string(iv.lo) << ", " << rat_to_string(iv.hi) << "]\n";
    }
    return out.str();
}

std::string roots_to_json(const std::vector<RatInterval>& roots) {
    json out;
    out["format_version"] = kReportFormatVersion;
    out["count"] = roots.size();
    out["intervals"] = intervals_json(roots);
    return out.dump(2);
}

std::string f4_roots_to_text(const F4RootBrackets& roots) {
    std::ostringstream out;
    out << roots.intervals.size() << " root enclosure(s)"
        << (roots.complete ? "" : " (incomplete: fewer sign changes than requested)") << "\n";
    for (const auto& iv : roots.intervals) {
        out << "[" << rat_to_string(iv.lo) << ", " << rat_to_string(iv.hi) << "]"
            << "  ~ " << iv.lo.get_d() << "\n";
    }
    return out.str();
}

std::string f4_roots_to_json(const F4RootBrackets& roots, const Rat& width) {
    json out;
    out["format_version"] = kReportFormatVersion;
    out["approximate"] = true;
    out["tolerance"] = rat_to_string(width);
    out["complete"] = roots.complete;
    out["intervals"] = intervals_json(roots.intervals);
    return out.dump(2);
}

}  // namespace polycert
