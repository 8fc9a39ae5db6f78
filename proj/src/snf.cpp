#include "sqtop/snf.hpp"

#include <algorithm>

#include "sqtop/util.hpp"

namespace sqtop {

Mat identity_mat(std::size_t n) {
    Mat m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    Mat out(n, std::vector<BigInt>(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < p; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

BigInt det(Mat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

struct SnfWork {
    Mat a, u, v;
    std::size_t m, n;

    void row_sub(std::size_t i, std::size_t j, const BigInt& q) {  // row_i -= q * row_j
        for (std::size_t c = 0; c < n; ++c) a[i][c] -= q * a[j][c];
        for (std::size_t c = 0; c < m; ++c) u[i][c] -= q * u[j][c];
    }
    void col_sub(std::size_t i, std::size_t j, const BigInt& q) {  // col_i -= q * col_j
        for (std::size_t r = 0; r < m; ++r) a[r][i] -= q * a[r][j];
        for (std::size_t r = 0; r < n; ++r) v[r][i] -= q * v[r][j];
    }
    void row_swap(std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) a[i][c] = -a[i][c];
        for (std::size_t c = 0; c < m; ++c) u[i][c] = -u[i][c];
    }
};

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SnfResult smith_normal_form(Mat a) {
    std::size_t m = a.size(), n = m ? a[0].size() : 0;
    SnfWork w{std::move(a), identity_mat(m), identity_mat(n), m, n};

    std::size_t t = 0;
    while (t < m && t < n) {
        // Pick the absolutely smallest nonzero entry of the trailing block as
        // pivot; repeat remainder reduction until the cross is clear.
        std::size_t pi = SIZE_MAX, pj = SIZE_MAX;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (w.a[i][j] != 0 &&
                    (pi == SIZE_MAX || abs_big(w.a[i][j]) < abs_big(w.a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == SIZE_MAX) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.a[i][t] == 0) continue;
                BigInt q = w.a[i][t] / w.a[t][t];
                w.row_sub(i, t, q);
                if (w.a[i][t] != 0) {
                    w.row_swap(t, i);  // remainder is smaller: restart with it
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.a[t][j] == 0) continue;
                BigInt q = w.a[t][j] / w.a[t][t];
                w.col_sub(j, t, q);
                if (w.a[t][j] != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
        }

        // Enforce divisibility of the remaining block by the pivot.
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (w.a[i][j] % w.a[t][t] != 0) {
                    w.row_sub(t, i, BigInt(-1));  // row_t += row_i
                    redo = true;
                }
        if (redo) continue;

        if (w.a[t][t] < 0) w.row_negate(t);
        ++t;
    }

    SnfResult res;
    res.rank = t;
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    res.d = std::move(w.a);
    return res;
}

Mat mat_inverse_unimodular(const Mat& u) {
    // U' U V' = I for unimodular U, hence U^{-1} = V' U'.
    SnfResult s = smith_normal_form(u);
    if (s.rank != u.size()) throw Error("matrix is not unimodular");
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.d[i][i] != 1) throw Error("matrix is not unimodular");
    return mat_mul(s.v, s.u);
}

namespace {

IntDegreeBasis int_degree_basis(const Presentation& p, long long d) {
    IntDegreeBasis db;
    db.degree = d;
    db.monomials = monomials_of_degree(p.gens(), d);
    const std::size_t nmon = db.monomials.size();

    // Columns of A are the ideal slice in monomial coordinates.
    std::vector<std::vector<BigInt>> cols;
    DegreeBasis index;  // reuse col_of
    index.degree = d;
    index.monomials = db.monomials;
    for (const IntPoly& r : p.int_relations()) {
        long long e = *r.degree();
        if (e > d) continue;
        for (const Monomial& mono : monomials_of_degree(p.gens(), d - e)) {
            std::vector<BigInt> col(nmon, 0);
            IntPoly shifted = r * IntPoly::monomial(mono);
            for (const auto& [m, c] : shifted.terms())
                col[index.col_of(m).value()] += c;
            cols.push_back(std::move(col));
        }
    }

    Mat a(nmon, std::vector<BigInt>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < nmon; ++i) a[i][j] = cols[j][i];

    if (cols.empty()) {
        db.free_rank = nmon;
        db.reduce.assign(nmon, std::vector<BigInt>(nmon, 0));
        for (std::size_t i = 0; i < nmon; ++i) db.reduce[i][i] = 1;
        db.lifts = db.reduce;
        return db;
    }

    SnfResult snf = smith_normal_form(std::move(a));
    db.free_rank = nmon - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        BigInt f = abs_big(snf.d[i][i]);
        if (f > 1) db.torsion.push_back(f);
    }
    // In transformed coordinates y = U x the quotient's free part is the rows
    // past the rank, so monomial j reduces to column j of those rows.
    db.reduce.assign(nmon, std::vector<BigInt>(db.free_rank, 0));
    for (std::size_t j = 0; j < nmon; ++j)
        for (std::size_t k = 0; k < db.free_rank; ++k) db.reduce[j][k] = snf.u[snf.rank + k][j];
    // Column rank + r of U^{-1} reduces to e_r: an integer lift of the r-th
    // free basis vector.
    Mat uinv = mat_inverse_unimodular(snf.u);
    db.lifts.assign(db.free_rank, std::vector<BigInt>(nmon, 0));
    for (std::size_t r = 0; r < db.free_rank; ++r)
        for (std::size_t j = 0; j < nmon; ++j) db.lifts[r][j] = uinv[j][snf.rank + r];
    return db;
}

}  // namespace

IntRingBasis IntRingBasis::compute(const Presentation& p, int threads) {
    if (p.mode() != Mode::Int)
        throw DomainMismatch("integer basis requested for a GF(2) presentation");
    IntRingBasis rb;
    rb.pres_ = std::make_shared<Presentation>(p);
    rb.bydeg_.resize(static_cast<std::size_t>(p.dim()) + 1);
    parallel_for(rb.bydeg_.size(), threads, [&](std::size_t d) {
        rb.bydeg_[d] = int_degree_basis(p, static_cast<long long>(d));
    });
    return rb;
}

const IntDegreeBasis& IntRingBasis::at(long long d) const {
    if (d < 0 || d >= static_cast<long long>(bydeg_.size()))
        throw DimensionOverflow("degree " + std::to_string(d) + " outside [0, " +
                                std::to_string(bydeg_.size() - 1) + "]");
    return bydeg_[static_cast<std::size_t>(d)];
}

std::vector<long long> IntRingBasis::ranks() const {
    std::vector<long long> out;
    out.reserve(bydeg_.size());
    for (const auto& db : bydeg_) out.push_back(static_cast<long long>(db.free_rank));
    return out;
}

bool IntRingBasis::torsion_free() const {
    return std::all_of(bydeg_.begin(), bydeg_.end(),
                       [](const IntDegreeBasis& db) { return db.torsion.empty(); });
}

long long IntRingBasis::euler() const {
    long long chi = 0;
    int sign = 1;
    for (const auto& db : bydeg_) {
        chi += sign * static_cast<long long>(db.free_rank);
        sign = -sign;
    }
    return chi;
}

std::vector<BigInt> IntRingBasis::normal_form(const IntPoly& cls) const {
    if (cls.is_zero()) return {};
    long long d = *cls.degree();
    const IntDegreeBasis& db = at(d);
    std::vector<BigInt> out(db.free_rank, 0);
    DegreeBasis index;
    index.degree = d;
    index.monomials = db.monomials;
    for (const auto& [m, c] : cls.terms()) {
        const auto& red = db.reduce[*index.col_of(m)];
        for (std::size_t k = 0; k < db.free_rank; ++k) out[k] += c * red[k];
    }
    return out;
}

Presentation mod2_reduce(const IntRingBasis& basis) {
    const Presentation& p = basis.pres();
    for (long long d = 0; d <= p.dim(); ++d) {
        const IntDegreeBasis& db = basis.at(d);
        if (!db.torsion.empty())
            throw TorsionPresent("integral quotient has torsion in degree " + std::to_string(d) +
                                 "; mod-2 reduction of the presentation is not valid");
        if (d % 2 == 1 && db.free_rank > 0)
            throw TorsionPresent("integral quotient has odd-degree classes in degree " +
                                 std::to_string(d) +
                                 "; mod-2 reduction of the presentation is not validated");
    }
    PresentationData out = p.data();
    out.mode = Mode::Gf2;
    out.relations.clear();
    GeneratorTable gens(out.generators);
    ParamTable no_params;
    for (const IntPoly& r : p.int_relations()) {
        Gf2Poly r2(gens.size());
        for (const auto& [m, c] : r.terms())
            if (c % 2 != 0) r2.add_term(m, ParamPoly::one());
        if (!r2.is_zero()) out.relations.push_back(render(r2, gens, no_params));
    }
    return Presentation::make(out);
}

}  // namespace sqtop
