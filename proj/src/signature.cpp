#include "sqtop/signature.hpp"

namespace sqtop {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

IntersectionForm intersection_form(const IntRingBasis& basis) {
    const Presentation& p = basis.pres();
    long long n = p.dim();
    if (n % 4 != 0)
        throw NotApplicable("signature needs dimension divisible by 4, got " + std::to_string(n));
    long long mid = n / 2;

    const IntDegreeBasis& mdb = basis.at(mid);
    if (!mdb.torsion.empty())
        throw OddMiddleTorsion("middle degree " + std::to_string(mid) + " carries torsion");
    const IntDegreeBasis& top = basis.at(n);
    if (top.free_rank != 1 || !top.torsion.empty())
        throw NotPoincare("top degree does not have free rank 1");

    // Orient the top coordinate: the grevlex-largest monomial with nonzero
    // coordinate gets a positive one.
    int orient = 0;
    for (std::size_t j = 0; j < top.monomials.size() && orient == 0; ++j) {
        if (top.reduce[j][0] > 0) orient = 1;
        if (top.reduce[j][0] < 0) orient = -1;
    }
    if (orient == 0) throw NotPoincare("top coordinate vanishes on every monomial");

    IntersectionForm form;
    form.degree = mid;
    std::size_t width = p.gens().size();
    for (std::size_t r = 0; r < mdb.free_rank; ++r) {
        IntPoly x(width);
        for (std::size_t j = 0; j < mdb.monomials.size(); ++j)
            if (mdb.lifts[r][j] != 0) x.add_term(mdb.monomials[j], mdb.lifts[r][j]);
        form.frame.push_back(std::move(x));
    }

    form.matrix.assign(mdb.free_rank, std::vector<BigInt>(mdb.free_rank, 0));
    for (std::size_t r = 0; r < mdb.free_rank; ++r)
        for (std::size_t s = r; s < mdb.free_rank; ++s) {
            std::vector<BigInt> c = basis.normal_form(form.frame[r] * form.frame[s]);
            BigInt val = c.empty() ? BigInt(0) : c[0] * orient;
            form.matrix[r][s] = val;
            form.matrix[s][r] = val;
        }
    form.determinant = det(form.matrix);
    return form;
}

int signature_of(Mat a) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != a[j][i]) throw Error("form is not symmetric");

    auto sym_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };

    int sig = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (a[t][t] == 0) {
            std::size_t i = t + 1;
            while (i < n && a[i][i] == 0) ++i;
            if (i < n) {
                sym_swap(t, i);
            } else {
                // all-zero diagonal: fold some off-diagonal entry onto it
                std::size_t r = SIZE_MAX, c = SIZE_MAX;
                for (std::size_t x = t; x < n && r == SIZE_MAX; ++x)
                    for (std::size_t y = x + 1; y < n; ++y)
                        if (a[x][y] != 0) {
                            r = x;
                            c = y;
                            break;
                        }
                if (r == SIZE_MAX) break;  // trailing block is zero
                for (std::size_t j = 0; j < n; ++j) a[r][j] += a[c][j];
                for (std::size_t j = 0; j < n; ++j) a[j][r] += a[j][c];
                if (r != t) sym_swap(t, r);
            }
        }
        BigInt p = a[t][t];
        sig += p > 0 ? 1 : -1;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (a[t][i] == 0) continue;
            BigInt f = a[t][i];
            // congruence by the elementary row_i := p*row_i - f*row_t keeps
            // the signature (it rescales the i-th slot by p^2)
            for (std::size_t j = t; j < n; ++j) a[i][j] = p * a[i][j] - f * a[t][j];
            for (std::size_t j = t; j < n; ++j) a[j][i] = a[i][j];
        }
    }
    return sig;
}

int signature(const IntRingBasis& basis) { return signature_of(intersection_form(basis).matrix); }

}  // namespace sqtop
