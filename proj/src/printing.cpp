#include "polycert/printing.hpp"

namespace polycert {

namespace {

std::string term_to_string(const Rat& coeff, int power) {
    std::string out;
    Rat a = rat_abs(coeff);
    if (power == 0) return rat_to_string(a);
    if (a != 1) {
        out += rat_to_string(a);
        out += "*";
    }
    out += "z";
    if (power != 1) {
        out += "^";
        out += std::to_string(power);
    }
    return out;
}

bool single_term(const Poly& p) {
    int nonzero = 0;
    for (const auto& c : p.coeffs()) {
        if (c != 0) ++nonzero;
    }
    return nonzero == 1;
}

}  // namespace

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += term_to_string(c, k);
    }
    return out;
}

std::string ratfun_to_string(const RatFun& f) {
    if (f.is_zero()) return "0";
    auto [num_scale, num] = primitive_part(f.num());
    auto [den_scale, den] = primitive_part(f.den());
    Rat scalar = num_scale / den_scale;
    bool show_den = !(den == Poly(1L));
    bool trivial_num = num == Poly(1L);
    bool scalar_prefix = scalar != 1;

    std::string out;
    if (scalar_prefix) {
        if (scalar == -1 && !trivial_num) {
            out += "-";
        } else {
            out += rat_to_string(scalar);
            if (!trivial_num) out += "*";
        }
    }
    if (!trivial_num || !scalar_prefix) {
        bool parens = !single_term(num) && (scalar_prefix || show_den);
        if (parens) out += "(";
        out += poly_to_string(num);
        if (parens) out += ")";
    }
    if (show_den) {
        out += "/";
        bool parens = !single_term(den);
        if (parens) out += "(";
        out += poly_to_string(den);
        if (parens) out += ")";
    }
    return out;
}

}  // namespace polycert
