#include "sqtop/monomial.hpp"

#include <algorithm>

namespace sqtop {

GeneratorTable::GeneratorTable(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name.empty())
            throw DomainMismatch("generator name must be nonempty");
        if (gens_[i].degree < 1)
            throw DomainMismatch("generator " + gens_[i].name + " has degree < 1");
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[j].name == gens_[i].name)
                throw DomainMismatch("duplicate generator name " + gens_[i].name);
    }
}

std::optional<std::size_t> GeneratorTable::find(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

Monomial::Monomial(std::vector<uint32_t> exps, const GeneratorTable& gens)
    : exps_(std::move(exps)) {
    if (gens.size() != exps_.size())
        throw DomainMismatch("monomial width does not match generator table");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        degree_ += static_cast<long long>(exps_[i]) * gens[i].degree;
}

Monomial Monomial::generator(const GeneratorTable& gens, std::size_t i, uint32_t e) {
    std::vector<uint32_t> exps(gens.size(), 0);
    exps[i] = e;
    return Monomial(std::move(exps), gens);
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](uint32_t e) { return e == 0; });
}

long long Monomial::total_exponent() const {
    long long s = 0;
    for (uint32_t e : exps_) s += e;
    return s;
}

Monomial Monomial::times(const Monomial& other) const {
    if (other.exps_.size() != exps_.size())
        throw DomainMismatch("monomial widths differ");
    std::vector<uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        uint64_t s = static_cast<uint64_t>(exps_[i]) + other.exps_[i];
        if (s > UINT32_MAX) throw DegreeOverflow("monomial exponent overflow");
        e[i] = static_cast<uint32_t>(s);
    }
    return Monomial(std::move(e), degree_ + other.degree_);
}

std::string Monomial::render(const GeneratorTable& gens) const {
    if (gens.size() != exps_.size())
        throw DomainMismatch("monomial width does not match generator table");
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += gens[i].name;
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

bool GrevlexLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.width() != b.width())
        throw DomainMismatch("comparing monomials of different widths");
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.width(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace sqtop
