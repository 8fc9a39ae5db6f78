#include "sqtop/poly.hpp"

namespace sqtop {

Gf2Poly substitute(const Gf2Poly& p, uint64_t mask, uint64_t values) {
    Gf2Poly out(p.width());
    for (const auto& [m, c] : p.terms()) out.add_term(m, c.substitute(mask, values));
    return out;
}

std::string render(const Gf2Poly& p, const GeneratorTable& gens, const ParamTable& params) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        if (c.is_one()) {
            out += m.render(gens);
        } else if (c.terms().size() == 1) {
            out += c.render(params);
            if (!m.is_one()) out += "*" + m.render(gens);
        } else {
            out += "(" + c.render(params) + ")";
            if (!m.is_one()) out += " * " + m.render(gens);
        }
    }
    return out;
}

std::string render(const IntPoly& p, const GeneratorTable& gens) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag == 1) {
            out += m.render(gens);
        } else {
            out += mag.str();
            if (!m.is_one()) out += "*" + m.render(gens);
        }
    }
    return out;
}

}  // namespace sqtop
