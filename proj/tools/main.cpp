#include "polycert/parser.hpp"
#include "polycert/printing.hpp"
#include "polycert/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace polycert;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

Rat parse_rat_or_exit(const std::string& text, const std::string& what) {
    auto value = rat_from_string(text);
    if (!value) {
        std::cerr << "error: malformed rational for " << what << ": '" << text << "'\n";
        std::exit(kExitUsage);
    }
    return *value;
}

RatFun parse_expr_or_exit(const std::string& text) {
    try {
        return parse_ratfun(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what() << "\n";
        std::exit(kExitUsage);
    } catch (const LowerError& e) {
        std::cerr << "error: " << e.what() << " (at offsets " << e.begin << ".." << e.end
                  << ")\n";
        std::exit(kExitUsage);
    }
}

Frame parse_frame_or_exit(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) {
        std::cerr << "error: --frame expects a1,a2,a3\n";
        std::exit(kExitUsage);
    }
    Frame frame{parse_rat_or_exit(parts[0], "--frame"), parse_rat_or_exit(parts[1], "--frame"),
                parse_rat_or_exit(parts[2], "--frame")};
    if (frame.a1 == 0 || frame.a2 == 0) {
        std::cerr << "error: --frame requires a1 and a2 nonzero\n";
        std::exit(kExitUsage);
    }
    return frame;
}

struct ReportOptions {
    std::string expr;
    std::string batch_file;
    std::string format = "text";
    std::vector<std::string> ode;
};

int run_reports(const ReportOptions& opt, bool classify_input) {
    std::vector<std::string> inputs;
    if (!opt.batch_file.empty()) {
        std::ifstream in(opt.batch_file);
        if (!in) {
            std::cerr << "error: cannot open batch file '" << opt.batch_file << "'\n";
            return kExitUsage;
        }
        std::string line;
        while (std::getline(in, line)) {
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            inputs.push_back(line);
        }
    } else {
        inputs.push_back(opt.expr);
    }

    std::optional<OdeIdentity> ode;
    if (!opt.ode.empty()) {
        RatFun coeff = parse_expr_or_exit(opt.ode[0]);
        if (!coeff.is_polynomial() || coeff.is_zero()) {
            std::cerr << "error: --ode coefficient must be a nonzero polynomial\n";
            return kExitUsage;
        }
        Rat constant = parse_rat_or_exit(opt.ode[1], "--ode constant");
        if (constant == 0) {
            std::cerr << "error: --ode constant must be nonzero\n";
            return kExitUsage;
        }
        ode = OdeIdentity{coeff.num(), constant};
    }

    bool any_failed = false;
    bool json = opt.format == "json";
    bool first = true;
    for (const std::string& input : inputs) {
        RatFun f = parse_expr_or_exit(input);
        if (f.is_constant()) {
            std::cerr << "error: input is a constant function: '" << input << "'\n";
            return kExitUsage;
        }
        Report report = make_report(input, f, classify_input);
        if (ode) {
            OdeCheck check;
            check.ode = *ode;
            check.residual = ode_residual(f, *ode);
            check.solves = check.residual.is_zero();
            report.ode = check;
        }
        if (!first) std::cout << "\n";
        first = false;
        std::cout << (json ? report_to_json(report) : report_to_text(report));
        if (json) std::cout << "\n";
        any_failed = any_failed || report_failed(report);
    }
    return any_failed ? kExitFailedCheck : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, certification and classification of rational solutions "
                 "of P(z) y'' = c y"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a family member and print it");
    std::string family;
    int n = 0;
    int q_param = 0;
    int terms = 0;
    std::string k_text;
    std::string frame_text;
    construct->add_option("--family", family, "power|f2|f3|f4|bessel")->required();
    construct->add_option("--n", n, "family index n");
    construct->add_option("--K", k_text, "rational parameter K (f3)");
    construct->add_option("--Q", q_param, "integer exponent (power)");
    construct->add_option("--terms", terms, "series truncation order (bessel)");
    construct->add_option("--frame", frame_text, "affine frame a1,a2,a3");

    // verify
    auto* verify = app.add_subcommand("verify", "check the real-rootedness hypotheses");
    ReportOptions verify_opt;
    verify->add_option("expr", verify_opt.expr, "rational expression in z");
    verify->add_option("--format", verify_opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--ode", verify_opt.ode, "polynomial P and constant c for P*y'' = c*y")
        ->expected(2);
    verify->add_option("--batch", verify_opt.batch_file,
                       "file of expressions, one per line, '#' comments");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "match against the canonical families");
    ReportOptions classify_opt;
    classify_cmd->add_option("expr", classify_opt.expr, "rational expression in z");
    classify_cmd->add_option("--format", classify_opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    classify_cmd->add_option("--batch", classify_opt.batch_file,
                             "file of expressions, one per line, '#' comments");

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "isolate real roots of the numerator");
    std::string roots_expr;
    std::vector<std::string> interval;
    std::string width_text = "1/64";
    std::string roots_format = "text";
    roots_cmd->add_option("expr", roots_expr, "rational expression in z")->required();
    roots_cmd->add_option("--interval", interval, "rational endpoints a b")->expected(2);
    roots_cmd->add_option("--width", width_text, "maximum interval width (rational)");
    roots_cmd->add_option("--format", roots_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // tables
    app.add_subcommand("tables", "print the built-in example catalog");

    // f4roots
    auto* f4_cmd = app.add_subcommand("f4roots", "certified enclosures of the negative roots "
                                                 "of the z*y'' = y series solution");
    int count = 2;
    std::string bound_text = "16";
    std::string f4_format = "text";
    f4_cmd->add_option("--count", count, "number of roots to bracket");
    f4_cmd->add_option("--bound", bound_text, "search on [-bound, 0)");
    f4_cmd->add_option("--format", f4_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            FamilySpec spec;
            if (family == "power") {
                spec.tag = FamilyTag::power;
                spec.Q = q_param;
            } else if (family == "f2") {
                spec.tag = FamilyTag::f2;
                spec.n = n;
            } else if (family == "f3") {
                spec.tag = FamilyTag::f3;
                spec.n = n;
                if (k_text.empty()) {
                    std::cerr << "error: --family f3 requires --K\n";
                    return kExitUsage;
                }
                spec.K = parse_rat_or_exit(k_text, "--K");
            } else if (family == "f4") {
                spec.tag = FamilyTag::f4;
                spec.n = n;
            } else if (family == "bessel") {
                spec.tag = FamilyTag::bessel_trunc;
                spec.terms = terms;
            } else {
                std::cerr << "error: unknown family '" << family << "'\n";
                return kExitUsage;
            }
            if (!frame_text.empty()) spec.frame = parse_frame_or_exit(frame_text);
            RatFun g = build_family(spec);
            std::cout << ratfun_to_string(g) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            if (verify_opt.expr.empty() == verify_opt.batch_file.empty()) {
                std::cerr << "error: verify needs exactly one of EXPR or --batch\n";
                return kExitUsage;
            }
            return run_reports(verify_opt, false);
        }
        if (classify_cmd->parsed()) {
            if (classify_opt.expr.empty() == classify_opt.batch_file.empty()) {
                std::cerr << "error: classify needs exactly one of EXPR or --batch\n";
                return kExitUsage;
            }
            return run_reports(classify_opt, true);
        }
        if (roots_cmd->parsed()) {
            RatFun f = parse_expr_or_exit(roots_expr);
            Rat width = parse_rat_or_exit(width_text, "--width");
            if (width <= 0) {
                std::cerr << "error: --width must be positive\n";
                return kExitUsage;
            }
            if (f.num().is_zero()) {
                std::cerr << "error: the zero function has no numerator roots\n";
                return kExitUsage;
            }
            std::vector<RatInterval> isolated;
            if (f.num().is_constant()) {
                // no roots
            } else if (!interval.empty()) {
                Rat a = parse_rat_or_exit(interval[0], "--interval");
                Rat b = parse_rat_or_exit(interval[1], "--interval");
                if (!(a < b)) {
                    std::cerr << "error: --interval requires a < b\n";
                    return kExitUsage;
                }
                for (const auto& iv : isolate_real_roots(f.num(), width)) {
                    if (iv.hi > a && iv.lo < b) isolated.push_back(iv);
                }
            } else {
                isolated = isolate_real_roots(f.num(), width);
            }
            std::cout << (roots_format == "json" ? roots_to_json(isolated)
                                                 : roots_to_text(isolated));
            if (roots_format == "json") std::cout << "\n";
            return kExitOk;
        }
        if (app.get_subcommand("tables")->parsed()) {
            std::cout << tables_text();
            return kExitOk;
        }
        if (f4_cmd->parsed()) {
            Rat bound = parse_rat_or_exit(bound_text, "--bound");
            if (bound <= 0 || count < 0) {
                std::cerr << "error: f4roots needs --bound > 0 and --count >= 0\n";
                return kExitUsage;
            }
            F4RootBrackets roots = f4_negative_roots(bound, count);
            const Rat width = make_rat(Int(1), Int(1000000));
            std::cout << (f4_format == "json" ? f4_roots_to_json(roots, width)
                                              : f4_roots_to_text(roots));
            if (f4_format == "json") std::cout << "\n";
            return roots.complete ? kExitOk : kExitFailedCheck;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
