#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "sqtop/basis.hpp"

namespace sqtop {

// Composite Sq^{a_1} ... Sq^{a_r} with power-of-two letters, applied right
// to left (a_r hits the argument first).
using SqComposite = std::vector<int>;

// Mod-2 sum of composites; summands are kept sorted and duplicate-free.
struct AdemWord {
    std::vector<SqComposite> summands;
    bool operator==(const AdemWord&) const = default;
};

// Express Sq^k through composites of power-of-two squares via the Adem
// relations (binomial parities by Lucas). Memoized.
const AdemWord& adem_decompose(int k);

// Weak compositions of n into k ordered parts, lexicographically descending
// from (n, 0, ..., 0).
class WeakCompositions {
  public:
    WeakCompositions(long long n, std::size_t k);
    bool valid() const { return valid_; }
    const std::vector<long long>& parts() const { return parts_; }
    void next();

  private:
    std::vector<long long> parts_;
    long long n_;
    bool valid_;
};

// Values of Sq^i on every generator, 0 <= i <= |g|, stored in normal form.
// Entries come from the instability/top axioms, from the user table, or are
// derived (Sq^1-image rule, Adem words). Power-of-two entries that cannot be
// established are recorded in missing() with evaluation deferred: touching
// them raises TableIncomplete naming the root entry.
class SquareTable {
  public:
    enum class Provenance { Axiom, User, Derived };
    struct Entry {
        Gf2Poly value;
        Provenance prov;
    };

    static SquareTable build(const RingBasis& basis, bool strict = false);

    const Entry* find(std::size_t g, int i) const;
    const Gf2Poly& at(std::size_t g, int i) const;
    const std::vector<std::string>& missing() const { return missing_; }
    bool complete_up_to(int n) const;
    // Largest n such that every Sq^i with i <= n is available on every
    // generator of degree >= i.
    int max_complete_index() const;

  private:
    const GeneratorTable* gens_ = nullptr;
    std::map<std::pair<std::size_t, int>, Entry> entries_;
    std::map<std::pair<std::size_t, int>, std::string> unavailable_;
    std::vector<std::string> missing_;
    friend class TableBuilder;
};

// Cartan-formula evaluation of squares against a completed table. Not
// thread-safe: the power cache is shared.
class SqEvaluator {
  public:
    SqEvaluator(const RingBasis& basis, const SquareTable& table)
        : basis_(basis), table_(table) {}

    const RingBasis& basis() const { return basis_; }
    const SquareTable& table() const { return table_; }

    // Degree-(e|g|+n) component of (total square of g)^e, not reduced.
    Gf2Poly sq_power(std::size_t g, long long e, long long n) const;
    // Same value by brute-force composition expansion (test oracle).
    Gf2Poly sq_power_naive(std::size_t g, long long e, long long n) const;
    // Raw Cartan expansion of Sq^n on one monomial, grouping equal factors.
    Gf2Poly sq_monomial_raw(const Monomial& m, long long n) const;

    // Sq^n of a homogeneous class, in normal form.
    Gf2Poly sq_class(const Gf2Poly& cls, long long n) const;
    RingBasis::Coords sq(const Gf2Poly& cls, long long n) const;

  private:
    const RingBasis& basis_;
    const SquareTable& table_;
    mutable std::map<std::tuple<std::size_t, long long, long long>, Gf2Poly> cache_;
};

// Evaluate an Adem word on a class (sum over composites, inner square
// first, normal form between letters).
Gf2Poly apply_word(const SqEvaluator& ev, const AdemWord& word, const Gf2Poly& cls);

}  // namespace sqtop
