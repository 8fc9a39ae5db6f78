#include "sqtop/parampoly.hpp"

#include <algorithm>
#include <bit>

namespace sqtop {

ParamTable::ParamTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > 64)
        throw DomainMismatch("at most 64 parameters are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw DomainMismatch("parameter name must be nonempty");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == names_[i])
                throw DomainMismatch("duplicate parameter name " + names_[i]);
    }
}

std::optional<std::size_t> ParamTable::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool ParamPoly::term_less(uint64_t a, uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

bool ParamPoly::less(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), term_less);
}

std::vector<uint64_t> ParamPoly::normalize(std::vector<uint64_t> masks) {
    std::sort(masks.begin(), masks.end(), term_less);
    // Cancel pairs mod 2.
    std::vector<uint64_t> out;
    for (std::size_t i = 0; i < masks.size();) {
        std::size_t j = i;
        while (j < masks.size() && masks[j] == masks[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(masks[i]);
        i = j;
    }
    return out;
}

ParamPoly ParamPoly::param(std::size_t i) {
    if (i >= 64) throw DomainMismatch("parameter index out of range");
    return ParamPoly({uint64_t{1} << i});
}

ParamPoly ParamPoly::from_masks(std::vector<uint64_t> masks) {
    return ParamPoly(normalize(std::move(masks)));
}

uint64_t ParamPoly::support() const {
    uint64_t s = 0;
    for (uint64_t t : terms_) s |= t;
    return s;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    // Terms are sorted, so a symmetric difference merge suffices.
    std::vector<uint64_t> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(),
                                  o.terms_.end(), std::back_inserter(out), term_less);
    return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    std::vector<uint64_t> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (uint64_t a : terms_)
        for (uint64_t b : o.terms_) prods.push_back(a | b);
    return ParamPoly(normalize(std::move(prods)));
}

bool ParamPoly::eval(uint64_t assignment) const {
    bool v = false;
    for (uint64_t t : terms_)
        if ((t & assignment) == t) v = !v;
    return v;
}

ParamPoly ParamPoly::substitute(uint64_t mask, uint64_t values) const {
    std::vector<uint64_t> out;
    for (uint64_t t : terms_) {
        // A parameter set to 0 kills the term; parameters set to 1 drop out.
        if ((t & mask & ~values) != 0) continue;
        out.push_back(t & ~mask);
    }
    return ParamPoly(normalize(std::move(out)));
}

ParamPoly ParamPoly::renumber(const std::vector<std::size_t>& remap) const {
    std::vector<uint64_t> out;
    out.reserve(terms_.size());
    for (uint64_t t : terms_) {
        uint64_t nt = 0;
        for (std::size_t i = 0; i < 64; ++i) {
            if (!(t >> i & 1)) continue;
            if (i >= remap.size() || remap[i] >= 64)
                throw DomainMismatch("parameter renumbering does not cover support");
            nt |= uint64_t{1} << remap[i];
        }
        out.push_back(nt);
    }
    return ParamPoly(normalize(std::move(out)));
}

std::string ParamPoly::render(const ParamTable& params) const {
    if (is_zero()) return "0";
    std::string out;
    for (uint64_t t : terms_) {
        if (!out.empty()) out += "+";
        if (t == 0) {
            out += "1";
            continue;
        }
        std::string factor;
        for (std::size_t i = 0; i < 64; ++i) {
            if (!(t >> i & 1)) continue;
            if (i >= params.size())
                throw DomainMismatch("parameter index out of table range");
            if (!factor.empty()) factor += "*";
            factor += params.name(i);
        }
        out += factor;
    }
    return out;
}

}  // namespace sqtop
