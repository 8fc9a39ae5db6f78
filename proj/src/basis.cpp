#include "sqtop/basis.hpp"

#include <algorithm>
#include <bit>

#include "sqtop/util.hpp"

namespace sqtop {

std::size_t BitRow::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return npos;
}

SolveStatus solve_gf2(std::vector<BitRow> rows, std::size_t ncols, std::vector<ParamPoly> rhs,
                      std::vector<ParamPoly>& out) {
    if (rows.size() != rhs.size()) throw DomainMismatch("solve_gf2: shape mismatch");
    std::vector<std::size_t> pivot_row(ncols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = rows[r].first_set(); c != BitRow::npos; c = rows[r].first_set()) {
            if (pivot_row[c] == SIZE_MAX) {
                pivot_row[c] = r;
                ++rank;
                break;
            }
            rows[r] ^= rows[pivot_row[c]];
            rhs[r] += rhs[pivot_row[c]];
        }
        if (!rows[r].any() && !rhs[r].is_zero()) return SolveStatus::Inconsistent;
    }
    if (rank < ncols) return SolveStatus::Underdetermined;
    // Back-substitute: clear every pivot column above its pivot.
    for (std::size_t c = ncols; c-- > 0;) {
        std::size_t pr = pivot_row[c];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || !rows[r].get(c)) continue;
            rows[r] ^= rows[pr];
            rhs[r] += rhs[pr];
        }
    }
    out.assign(ncols, ParamPoly::zero());
    for (std::size_t c = 0; c < ncols; ++c) out[c] = rhs[pivot_row[c]];
    return SolveStatus::Unique;
}

namespace {

void enumerate_rec(const GeneratorTable& gens, std::size_t slot, long long remaining,
                   std::vector<uint32_t>& exps, std::vector<Monomial>& out) {
    if (slot == gens.size()) {
        if (remaining == 0) out.emplace_back(exps, gens);
        return;
    }
    if (slot + 1 == gens.size()) {
        int dg = gens[slot].degree;
        if (remaining % dg == 0) {
            exps[slot] = static_cast<uint32_t>(remaining / dg);
            out.emplace_back(exps, gens);
            exps[slot] = 0;
        }
        return;
    }
    int dg = gens[slot].degree;
    for (long long e = 0; e * dg <= remaining; ++e) {
        exps[slot] = static_cast<uint32_t>(e);
        enumerate_rec(gens, slot + 1, remaining - e * dg, exps, out);
    }
    exps[slot] = 0;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return GrevlexLess{}(b, a); }
};

}  // namespace

std::vector<Monomial> monomials_of_degree(const GeneratorTable& gens, long long d) {
    if (d < 0) return {};
    if (gens.size() == 0) {
        std::vector<Monomial> out;
        if (d == 0) out.push_back(Monomial::one(0));
        return out;
    }
    std::vector<Monomial> out;
    std::vector<uint32_t> exps(gens.size(), 0);
    enumerate_rec(gens, 0, d, exps, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

std::vector<Gf2Poly> relation_slice(const Presentation& p, long long d) {
    std::vector<Gf2Poly> out;
    for (const Gf2Poly& r : p.relations()) {
        long long e = *r.degree();  // relations are homogeneous and nonzero
        if (e > d) continue;
        for (const Monomial& m : monomials_of_degree(p.gens(), d - e))
            out.push_back(r * Gf2Poly::monomial(m));
    }
    return out;
}

std::optional<std::size_t> DegreeBasis::col_of(const Monomial& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m, GrevlexGreater{});
    if (it == monomials.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::size_t>(it - monomials.begin());
}

namespace {

DegreeBasis degree_basis(const Presentation& p, long long d) {
    DegreeBasis db;
    db.degree = d;
    db.monomials = monomials_of_degree(p.gens(), d);
    const std::size_t ncols = db.monomials.size();

    // Row-reduce the ideal slice.
    std::vector<BitRow> rows;
    for (const Gf2Poly& s : relation_slice(p, d)) {
        BitRow row(ncols);
        for (const auto& [m, c] : s.terms()) row.set(db.col_of(m).value());
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_row(ncols, SIZE_MAX);
    for (auto& row : rows) {
        for (std::size_t c = row.first_set(); c != BitRow::npos; c = row.first_set()) {
            if (pivot_row[c] == SIZE_MAX) {
                pivot_row[c] = static_cast<std::size_t>(&row - rows.data());
                break;
            }
            row ^= rows[pivot_row[c]];
        }
    }
    for (std::size_t c = ncols; c-- > 0;) {
        if (pivot_row[c] == SIZE_MAX) continue;
        for (auto& row : rows) {
            if (&row == &rows[pivot_row[c]]) continue;
            if (row.get(c)) row ^= rows[pivot_row[c]];
        }
    }

    for (std::size_t c = 0; c < ncols; ++c)
        if (pivot_row[c] == SIZE_MAX) db.std_cols.push_back(c);

    std::vector<std::size_t> std_pos(ncols, SIZE_MAX);
    for (std::size_t k = 0; k < db.std_cols.size(); ++k) std_pos[db.std_cols[k]] = k;

    db.reduce.assign(ncols, BitRow(db.std_cols.size()));
    for (std::size_t c = 0; c < ncols; ++c) {
        if (pivot_row[c] == SIZE_MAX) {
            db.reduce[c].set(std_pos[c]);
            continue;
        }
        // In reduced form the pivot row reads  m_c = sum of its standard
        // columns (signs are trivial mod 2).
        const BitRow& row = rows[pivot_row[c]];
        for (std::size_t j = 0; j < ncols; ++j)
            if (j != c && row.get(j)) db.reduce[c].set(std_pos[j]);
    }
    return db;
}

}  // namespace

RingBasis RingBasis::compute(const Presentation& p, int threads) {
    if (p.mode() == Mode::Int)
        throw DomainMismatch("GF(2) basis requested for an integer presentation");
    RingBasis rb;
    rb.pres_ = std::make_shared<Presentation>(p);
    rb.bydeg_.resize(static_cast<std::size_t>(p.dim()) + 1);
    parallel_for(rb.bydeg_.size(), threads,
                 [&](std::size_t d) { rb.bydeg_[d] = degree_basis(p, static_cast<long long>(d)); });
    return rb;
}

const DegreeBasis& RingBasis::at(long long d) const {
    if (d < 0 || d >= static_cast<long long>(bydeg_.size()))
        throw DimensionOverflow("degree " + std::to_string(d) + " outside [0, " +
                                std::to_string(bydeg_.size() - 1) + "]");
    return bydeg_[static_cast<std::size_t>(d)];
}

std::vector<long long> RingBasis::betti() const {
    std::vector<long long> b;
    b.reserve(bydeg_.size());
    for (const auto& db : bydeg_) b.push_back(static_cast<long long>(db.dim()));
    return b;
}

void RingBasis::check_poincare() const {
    auto b = betti();
    long long n = static_cast<long long>(b.size()) - 1;
    if (b[static_cast<std::size_t>(n)] != 1)
        throw NotPoincare("top degree has rank " + std::to_string(b.back()) + ", expected 1");
    for (long long i = 0; i <= n; ++i)
        if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(n - i)])
            throw NotPoincare("b_" + std::to_string(i) + " = " +
                              std::to_string(b[static_cast<std::size_t>(i)]) + " but b_" +
                              std::to_string(n - i) + " = " +
                              std::to_string(b[static_cast<std::size_t>(n - i)]));
}

long long RingBasis::euler() const {
    long long chi = 0;
    int sign = 1;
    for (const auto& db : bydeg_) {
        chi += sign * static_cast<long long>(db.dim());
        sign = -sign;
    }
    return chi;
}

bool RingBasis::Coords::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const ParamPoly& x) { return x.is_zero(); });
}

RingBasis::Coords RingBasis::normal_form(const Gf2Poly& cls) const {
    Coords out;
    if (cls.is_zero()) return out;
    long long d = *cls.degree();  // throws InhomogeneousInput when mixed
    const DegreeBasis& db = at(d);
    out.degree = d;
    out.c.assign(db.dim(), ParamPoly::zero());
    for (const auto& [m, coef] : cls.terms()) {
        const BitRow& red = db.reduce[*db.col_of(m)];
        for (std::size_t k = 0; k < db.dim(); ++k)
            if (red.get(k)) out.c[k] += coef;
    }
    return out;
}

Gf2Poly RingBasis::normal_form_poly(const Gf2Poly& cls) const {
    Gf2Poly out(pres().gens().size());
    Coords nf = normal_form(cls);
    if (nf.degree < 0) return out;
    const DegreeBasis& db = at(nf.degree);
    for (std::size_t k = 0; k < nf.c.size(); ++k)
        if (!nf.c[k].is_zero()) out.add_term(db.basis_monomial(k), nf.c[k]);
    return out;
}

std::vector<BitRow> RingBasis::pairing(long long i) const {
    long long n = pres().dim();
    if (i < 0 || i > n) throw DimensionOverflow("pairing degree outside [0, n]");
    const DegreeBasis& top = at(n);
    if (top.dim() != 1)
        throw NotPoincare("top degree has rank " + std::to_string(top.dim()) + ", expected 1");
    const DegreeBasis& a = at(i);
    const DegreeBasis& b = at(n - i);
    if (a.dim() != b.dim())
        throw NotPoincare("b_" + std::to_string(i) + " != b_" + std::to_string(n - i));

    std::vector<BitRow> mat(a.dim(), BitRow(b.dim()));
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t s = 0; s < b.dim(); ++s) {
            Monomial prod = a.basis_monomial(r).times(b.basis_monomial(s));
            if (top.reduce[*top.col_of(prod)].get(0)) mat[r].set(s);
        }

    // Poincare duality demands this matrix be invertible.
    std::vector<ParamPoly> rhs(a.dim(), ParamPoly::zero()), sol;
    if (a.dim() > 0 && solve_gf2(mat, b.dim(), rhs, sol) != SolveStatus::Unique)
        throw DegeneratePairing("pairing between degrees " + std::to_string(i) + " and " +
                                std::to_string(n - i) + " is singular");
    return mat;
}

}  // namespace sqtop
