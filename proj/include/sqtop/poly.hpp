#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

#include "sqtop/monomial.hpp"
#include "sqtop/parampoly.hpp"

namespace sqtop {

using BigInt = boost::multiprecision::cpp_int;

inline bool coeff_is_zero(const ParamPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const BigInt& c) { return c == 0; }
inline ParamPoly coeff_one(const ParamPoly*) { return ParamPoly::one(); }
inline BigInt coeff_one(const BigInt*) { return BigInt(1); }

// Sum of monomials with nonzero coefficients, kept in grevlex order. The
// width (number of generator slots) is fixed per polynomial.
template <class C>
class GradedPoly {
  public:
    using Terms = std::map<Monomial, C, GrevlexLess>;

    GradedPoly() = default;
    explicit GradedPoly(std::size_t width) : width_(width) {}

    static GradedPoly zero(std::size_t width) { return GradedPoly(width); }
    static GradedPoly unit(std::size_t width) {
        GradedPoly p(width);
        p.add_term(Monomial::one(width), coeff_one(static_cast<const C*>(nullptr)));
        return p;
    }
    static GradedPoly monomial(Monomial m, C c = coeff_one(static_cast<const C*>(nullptr))) {
        GradedPoly p(m.width());
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    std::size_t width() const { return width_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add_term(Monomial m, C c) {
        if (m.width() != width_)
            throw DomainMismatch("term width does not match polynomial width");
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    GradedPoly operator+(const GradedPoly& o) const {
        check_width(o);
        GradedPoly out(*this);
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }

    GradedPoly operator*(const GradedPoly& o) const {
        check_width(o);
        GradedPoly out(width_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) out.add_term(m1.times(m2), c1 * c2);
        return out;
    }

    GradedPoly operator*(const C& c) const {
        GradedPoly out(width_);
        for (const auto& [m, cm] : terms_) out.add_term(m, cm * c);
        return out;
    }

    GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }

    bool operator==(const GradedPoly& o) const {
        return width_ == o.width_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long long d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    // Common degree of all terms; nullopt for the zero polynomial.
    std::optional<long long> degree() const {
        if (terms_.empty()) return std::nullopt;
        long long d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d)
                throw InhomogeneousInput("polynomial mixes degrees " + std::to_string(d) +
                                         " and " + std::to_string(m.degree()));
        return d;
    }

    // Terms of one degree, as a polynomial.
    GradedPoly component(long long d) const {
        GradedPoly out(width_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) out.add_term(m, c);
        return out;
    }

    long long max_degree() const {
        long long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

  private:
    void check_width(const GradedPoly& o) const {
        if (o.width_ != width_) throw DomainMismatch("polynomial widths differ");
    }

    std::size_t width_ = 0;
    Terms terms_;
};

using Gf2Poly = GradedPoly<ParamPoly>;
using IntPoly = GradedPoly<BigInt>;

template <class C>
GradedPoly<C> pow(const GradedPoly<C>& base, unsigned e) {
    GradedPoly<C> acc = GradedPoly<C>::unit(base.width());
    GradedPoly<C> sq = base;
    while (e) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    return acc;
}

// Apply a parameter assignment to every coefficient (GF(2) classes only).
Gf2Poly substitute(const Gf2Poly& p, uint64_t mask, uint64_t values);

std::string render(const Gf2Poly& p, const GeneratorTable& gens, const ParamTable& params);
std::string render(const IntPoly& p, const GeneratorTable& gens);

}  // namespace sqtop
