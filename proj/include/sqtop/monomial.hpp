#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqtop/errors.hpp"

namespace sqtop {

struct Generator {
    std::string name;
    int degree;
};

// Ordered list of ring generators; positions are the exponent slots of
// every Monomial built against it.
class GeneratorTable {
  public:
    GeneratorTable() = default;
    explicit GeneratorTable(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> find(const std::string& name) const;

    bool operator==(const GeneratorTable&) const = default;

  private:
    std::vector<Generator> gens_;
};

// Exponent vector over a fixed GeneratorTable, carrying its weighted degree.
class Monomial {
  public:
    Monomial() = default;
    Monomial(std::vector<uint32_t> exps, const GeneratorTable& gens);

    static Monomial one(std::size_t ngens) { return Monomial(std::vector<uint32_t>(ngens, 0), 0); }
    static Monomial generator(const GeneratorTable& gens, std::size_t i, uint32_t e = 1);

    std::size_t width() const { return exps_.size(); }
    uint32_t operator[](std::size_t i) const { return exps_[i]; }

    bool is_one() const;
    long long total_exponent() const;
    long long degree() const { return degree_; }

    Monomial times(const Monomial& other) const;

    std::string render(const GeneratorTable& gens) const;

    bool operator==(const Monomial&) const = default;

  private:
    Monomial(std::vector<uint32_t> exps, long long degree)
        : exps_(std::move(exps)), degree_(degree) {}

    std::vector<uint32_t> exps_;
    long long degree_ = 0;
};

// Graded reverse lexicographic order: compare weighted degree first; on ties
// the monomial with the larger exponent at the last differing slot is the
// smaller one.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace sqtop
