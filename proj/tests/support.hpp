#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sqtop/basis.hpp"
#include "sqtop/parse.hpp"
#include "sqtop/presentation.hpp"

namespace sqtop::test {

// Assembles a presentation without going through a manifest file.
inline Presentation make_pres(std::string name, Mode mode, long long dim,
                              std::vector<std::pair<std::string, long long>> gens,
                              std::vector<std::string> rels = {},
                              std::vector<std::string> params = {},
                              std::map<std::string, std::map<int, std::string>> steenrod = {},
                              bool smooth = true) {
    PresentationData d;
    d.name = std::move(name);
    d.mode = mode;
    d.dimension = dim;
    for (auto& [n, dg] : gens) d.generators.push_back({n, dg});
    d.relations = std::move(rels);
    d.parameters = std::move(params);
    d.steenrod = std::move(steenrod);
    d.assume_smooth = smooth;
    return Presentation::make(d);
}

inline Gf2Poly pc(const Presentation& p, const std::string& expr) {
    return parse_class(expr, p.gens(), p.params());
}

// Single-term parse helper; the expression must reduce to one monomial.
inline Monomial mono(const Presentation& p, const std::string& expr) {
    Gf2Poly poly = pc(p, expr);
    return poly.terms().begin()->first;
}

// Uniformly random (possibly zero) sum of degree-d monomials.
inline Gf2Poly random_class(const RingBasis& rb, long long d, std::mt19937_64& rng) {
    const DegreeBasis& db = rb.at(d);
    Gf2Poly out(rb.pres().gens().size());
    for (const Monomial& m : db.monomials)
        if (rng() & 1) out = out + Gf2Poly::monomial(m);
    return out;
}

// Random nonzero class in a random degree of [1, max_degree]; gives up after
// a bounded number of draws so callers never loop forever.
inline Gf2Poly random_nonzero_class(const RingBasis& rb, long long max_degree,
                                    std::mt19937_64& rng, long long* degree_out) {
    for (int tries = 0; tries < 64; ++tries) {
        long long d = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(max_degree));
        Gf2Poly cand = rb.normal_form_poly(random_class(rb, d, rng));
        if (!cand.is_zero()) {
            *degree_out = d;
            return cand;
        }
    }
    *degree_out = 0;
    return Gf2Poly(rb.pres().gens().size());
}

}  // namespace sqtop::test
