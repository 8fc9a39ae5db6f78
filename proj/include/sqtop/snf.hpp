#pragma once

#include <memory>
#include <vector>

#include "sqtop/basis.hpp"
#include "sqtop/presentation.hpp"

namespace sqtop {

using Mat = std::vector<std::vector<BigInt>>;

Mat identity_mat(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
BigInt det(Mat a);  // fraction-free Bareiss
Mat mat_inverse_unimodular(const Mat& u);

// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
// dividing the next; `rank` counts the nonzero diagonal entries.
struct SnfResult {
    Mat d, u, v;
    std::size_t rank = 0;
};
SnfResult smith_normal_form(Mat a);

// Additive picture of one degree of an integer quotient: free rank, torsion
// invariants, and the free coordinates of every monomial.
struct IntDegreeBasis {
    long long degree = 0;
    std::vector<Monomial> monomials;            // grevlex-descending
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;                // invariant factors > 1
    std::vector<std::vector<BigInt>> reduce;    // per column: free coordinates
    std::vector<std::vector<BigInt>> lifts;     // per free coordinate: a
                                                // monomial vector reducing to e_r
};

class IntRingBasis {
  public:
    static IntRingBasis compute(const Presentation& p, int threads = 1);

    const Presentation& pres() const { return *pres_; }
    const IntDegreeBasis& at(long long d) const;

    std::vector<long long> ranks() const;
    bool torsion_free() const;
    long long euler() const;

    // Free coordinates of a homogeneous class in its degree; empty for zero.
    std::vector<BigInt> normal_form(const IntPoly& cls) const;

  private:
    std::shared_ptr<const Presentation> pres_;
    std::vector<IntDegreeBasis> bydeg_;
};

// Reduce an integer presentation mod 2. Refuses (TorsionPresent) when the
// integral quotient has torsion or odd-degree classes, where the coefficient
// reduction would not be the whole story.
Presentation mod2_reduce(const IntRingBasis& basis);

}  // namespace sqtop
