#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sqtop/presentation.hpp"

namespace sqtop {

// Dense GF(2) vector.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return w_[i >> 6] >> (i & 63) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitRow& operator^=(const BitRow& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    // Index of the first set bit, or npos.
    static constexpr std::size_t npos = SIZE_MAX;
    std::size_t first_set() const;

    bool operator==(const BitRow&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

// Solve M x = rhs over GF(2) where rhs (and hence x) carries ParamPoly
// entries; rows[i] spans ncols unknowns.
SolveStatus solve_gf2(std::vector<BitRow> rows, std::size_t ncols, std::vector<ParamPoly> rhs,
                      std::vector<ParamPoly>& out);

// All monomials of the given weighted degree, grevlex-descending.
std::vector<Monomial> monomials_of_degree(const GeneratorTable& gens, long long d);

// The ideal slice in one degree: every relation times every complementary
// monomial.
std::vector<Gf2Poly> relation_slice(const Presentation& p, long long d);

// Additive picture of one degree: standard monomials and the reduction of
// every monomial to coordinates over them.
struct DegreeBasis {
    long long degree = 0;
    std::vector<Monomial> monomials;      // grevlex-descending
    std::vector<std::size_t> std_cols;    // column indices of standard monomials
    std::vector<BitRow> reduce;           // per column: coordinates over std_cols

    std::size_t dim() const { return std_cols.size(); }
    const Monomial& basis_monomial(std::size_t k) const { return monomials[std_cols[k]]; }
    std::optional<std::size_t> col_of(const Monomial& m) const;
};

// GF(2) additive bases of every degree 0..dim. Owns a copy of the
// presentation so downstream consumers need only this object.
class RingBasis {
  public:
    static RingBasis compute(const Presentation& p, int threads = 1);

    const Presentation& pres() const { return *pres_; }
    const DegreeBasis& at(long long d) const;

    std::vector<long long> betti() const;
    void check_poincare() const;
    long long euler() const;

    // Coordinates of a homogeneous class over the standard basis of its
    // degree (zero classes yield an empty vector with degree -1).
    struct Coords {
        long long degree = -1;
        std::vector<ParamPoly> c;
        bool is_zero() const;
    };
    Coords normal_form(const Gf2Poly& cls) const;
    Gf2Poly normal_form_poly(const Gf2Poly& cls) const;

    // Cup-product pairing H^i x H^{n-i} -> H^n = GF(2); row r, column s is
    // the top coordinate of basis_i[r] * basis_{n-i}[s]. Throws
    // DegeneratePairing if singular.
    std::vector<BitRow> pairing(long long i) const;

  private:
    std::shared_ptr<const Presentation> pres_;
    std::vector<DegreeBasis> bydeg_;
};

}  // namespace sqtop
