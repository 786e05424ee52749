#ifndef POLYCERT_REPORT_HPP
#define POLYCERT_REPORT_HPP

#include "polycert/classifier.hpp"
#include "polycert/verifier.hpp"

#include <optional>
#include <string>

namespace polycert {

inline constexpr const char* kReportFormatVersion = "1";

enum class ReportFormat { text, json };

struct OdeCheck {
    OdeIdentity ode;
    bool solves = false;
    RatFun residual;
};

// Everything the CLI emits for one input expression. Rational data is
// serialized as exact "p/q" strings; only the f4 root section is approximate
// and carries its tolerance.
struct Report {
    std::string input;
    RatFun function;
    long m = 0;
    HypothesisReport hypotheses;
    std::optional<FamilyMatch> classification;
    std::optional<OdeCheck> ode;
    std::vector<RatInterval> zero_intervals;  // isolating intervals, num roots
    std::vector<RatInterval> pole_intervals;  // isolating intervals, den roots
};

Report make_report(const std::string& input, const RatFun& f, bool classify_input);

std::string report_to_text(const Report& report);
std::string report_to_json(const Report& report);

// True when the report signals a hypothesis or classification failure (CLI
// exit status 1).
bool report_failed(const Report& report);

// The built-in example catalog (the g, h and p families) in canonical
// expanded form; used byte-for-byte by the golden test.
std::string tables_text();

std::string roots_to_text(const std::vector<RatInterval>& roots);
std::string roots_to_json(const std::vector<RatInterval>& roots);

std::string f4_roots_to_text(const F4RootBrackets& roots);
std::string f4_roots_to_json(const F4RootBrackets& roots, const Rat& width);

}  // namespace polycert

#endif
