#include "sqtop/presentation.hpp"

#include <algorithm>
#include <bit>

namespace sqtop {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Gf2: return "gf2";
        case Mode::Gf2Param: return "gf2-parametric";
        case Mode::Int: return "int";
    }
    throw Error("unreachable");
}

Mode mode_from_name(const std::string& s) {
    if (s == "gf2") return Mode::Gf2;
    if (s == "gf2-parametric") return Mode::Gf2Param;
    if (s == "int") return Mode::Int;
    throw ManifestError("unknown mode '" + s + "'");
}

namespace {

bool is_power_of_two(int i) { return i > 0 && (i & (i - 1)) == 0; }

void check_homogeneous_relation(std::size_t idx, std::optional<long long> deg) {
    if (!deg) return;  // zero relation is vacuous but harmless
    if (*deg < 1)
        throw InhomogeneousRelation("relation #" + std::to_string(idx) +
                                    " has degree 0 (collapses the ring)");
}

}  // namespace

Presentation Presentation::make(const PresentationData& data) {
    Presentation p;
    p.data_ = data;
    if (data.dimension < 1) throw ManifestError("dimension must be >= 1");
    p.gens_ = GeneratorTable(data.generators);
    for (const auto& g : data.generators)
        if (g.degree > data.dimension)
            throw ManifestError("generator '" + g.name + "' has degree above the dimension");

    if (data.mode != Mode::Gf2Param && !data.parameters.empty())
        throw ManifestError("parameters require mode gf2-parametric");
    p.params_ = ParamTable(data.parameters);
    for (const auto& name : data.parameters)
        if (p.gens_.find(name))
            throw ManifestError("name '" + name + "' is both a generator and a parameter");

    for (std::size_t i = 0; i < data.relations.size(); ++i) {
        const std::string& text = data.relations[i];
        try {
            if (data.mode == Mode::Int) {
                IntPoly r = parse_int_class(text, p.gens_);
                check_homogeneous_relation(i, r.degree());
                if (!r.is_zero()) p.relationsZ_.push_back(std::move(r));
            } else {
                Gf2Poly r = parse_class(text, p.gens_, p.params_);
                check_homogeneous_relation(i, r.degree());
                for (const auto& [m, c] : r.terms())
                    if (!c.is_one())
                        throw ManifestError("relation #" + std::to_string(i) +
                                            " involves parameters");
                if (!r.is_zero()) p.relations2_.push_back(std::move(r));
            }
        } catch (const InhomogeneousInput& e) {
            throw InhomogeneousRelation("relation #" + std::to_string(i) + ": " + e.what());
        }
    }

    if (data.mode == Mode::Int && !data.steenrod.empty())
        throw ManifestError("square tables apply to GF(2) modes only");

    for (const auto& [gname, entries] : data.steenrod) {
        auto g = p.gens_.find(gname);
        if (!g) throw UnknownIdentifier("square table names unknown generator '" + gname + "'");
        int dg = p.gens_[*g].degree;
        for (const auto& [i, text] : entries) {
            if (!is_power_of_two(i))
                throw ManifestError("square index " + std::to_string(i) + " on " + gname +
                                    " is not a power of two");
            if (i > dg)
                throw ManifestError("square index " + std::to_string(i) + " exceeds degree of " +
                                    gname);
            Gf2Poly v = parse_class(text, p.gens_, p.params_);
            if (auto deg = v.degree()) {
                if (*deg != dg + i)
                    throw InhomogeneousInput("entry for square " + std::to_string(i) + " on " +
                                             gname + " has degree " + std::to_string(*deg) +
                                             ", expected " + std::to_string(dg + i));
            }
            p.squares_.emplace(std::make_pair(*g, i), std::move(v));
        }
    }
    return p;
}

const std::vector<Gf2Poly>& Presentation::relations() const {
    if (data_.mode == Mode::Int) throw DomainMismatch("integer presentation has no GF(2) relations");
    return relations2_;
}

const std::vector<IntPoly>& Presentation::int_relations() const {
    if (data_.mode != Mode::Int) throw DomainMismatch("GF(2) presentation has no integer relations");
    return relationsZ_;
}

Presentation Presentation::instantiate(const std::map<std::string, bool>& values) const {
    if (data_.mode != Mode::Gf2Param)
        throw DomainMismatch("only parametric presentations can be instantiated");
    uint64_t mask = 0, bits = 0;
    for (const auto& [name, val] : values) {
        auto i = params_.find(name);
        if (!i) throw UnknownIdentifier("unknown parameter '" + name + "'");
        mask |= uint64_t{1} << *i;
        if (val) bits |= uint64_t{1} << *i;
    }

    PresentationData out = data_;
    out.parameters.clear();
    std::vector<std::size_t> remap(params_.size(), SIZE_MAX);
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (mask >> i & 1) continue;
        remap[i] = out.parameters.size();
        out.parameters.push_back(params_.name(i));
    }
    if (out.parameters.empty()) out.mode = Mode::Gf2;
    ParamTable new_params(out.parameters);

    out.steenrod.clear();
    for (const auto& [key, poly] : squares_) {
        Gf2Poly sub(gens_.size());
        for (const auto& [m, c] : poly.terms())
            sub.add_term(m, c.substitute(mask, bits).renumber(remap));
        out.steenrod[gens_[key.first].name][key.second] = render(sub, gens_, new_params);
    }
    return make(out);
}

}  // namespace sqtop
