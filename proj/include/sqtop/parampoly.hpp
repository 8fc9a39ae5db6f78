#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqtop/errors.hpp"

namespace sqtop {

// Named boolean parameters; at most 64 so a parameter subset fits a bitmask.
class ParamTable {
  public:
    ParamTable() = default;
    explicit ParamTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> find(const std::string& name) const;

    bool operator==(const ParamTable&) const = default;

  private:
    std::vector<std::string> names_;
};

// Element of GF(2)[p_0,...,p_{k-1}] / (p_i^2 - p_i): a mod-2 sum of
// square-free parameter products. Each term is the bitmask of its parameter
// subset; the empty mask is the constant term 1. Terms are kept sorted by
// (popcount, value) and duplicate-free.
class ParamPoly {
  public:
    ParamPoly() = default;

    static ParamPoly zero() { return ParamPoly(); }
    static ParamPoly one() { return ParamPoly({0}); }
    static ParamPoly param(std::size_t i);
    static ParamPoly from_masks(std::vector<uint64_t> masks);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0] == 0; }
    bool is_constant() const { return terms_.empty() || is_one(); }

    const std::vector<uint64_t>& terms() const { return terms_; }
    uint64_t support() const;

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    bool operator==(const ParamPoly&) const = default;
    // Canonical term order gives a canonical total order, handy for sorting
    // condition sets deterministically.
    bool operator<(const ParamPoly& o) const { return less(terms_, o.terms_); }

    // Evaluate at a full assignment (bit i = value of parameter i).
    bool eval(uint64_t assignment) const;

    // Substitute the parameters selected by `mask` with the corresponding
    // bits of `values`; the surviving parameters keep their indices.
    ParamPoly substitute(uint64_t mask, uint64_t values) const;

    // Renumber parameters: new index of old parameter i is remap[i]; every
    // supported parameter must be mapped.
    ParamPoly renumber(const std::vector<std::size_t>& remap) const;

    std::string render(const ParamTable& params) const;

  private:
    explicit ParamPoly(std::vector<uint64_t> terms) : terms_(std::move(terms)) {}
    static bool term_less(uint64_t a, uint64_t b);
    static bool less(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static std::vector<uint64_t> normalize(std::vector<uint64_t> masks);

    std::vector<uint64_t> terms_;
};

}  // namespace sqtop
