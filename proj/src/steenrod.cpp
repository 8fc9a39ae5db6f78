#include "sqtop/steenrod.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sqtop/util.hpp"

namespace sqtop {

namespace {

bool is_pow2(int k) { return k > 0 && (k & (k - 1)) == 0; }

void xor_summand(std::vector<SqComposite>& acc, SqComposite c) {
    auto it = std::find(acc.begin(), acc.end(), c);
    if (it != acc.end())
        acc.erase(it);
    else
        acc.push_back(std::move(c));
}

std::string entry_name(const GeneratorTable& gens, std::size_t g, int i) {
    return "Sq^" + std::to_string(i) + " " + gens[g].name;
}

}  // namespace

const AdemWord& adem_decompose(int k) {
    static std::map<int, AdemWord> memo;
    if (k < 1) throw Error("square index must be positive");
    auto hit = memo.find(k);
    if (hit != memo.end()) return hit->second;

    AdemWord w;
    if (is_pow2(k)) {
        w.summands.push_back({k});
    } else {
        int b = 1;
        while (2 * b < k) b *= 2;
        int a = k - b;  // 0 < a < b, so Sq^a Sq^b is inadmissible
        // Sq^a Sq^b = C(b-1, a) Sq^k + sum_{c>=1} C(b-c-1, a-2c) Sq^{k-c} Sq^c
        // and C(b-1, a) = C(2^t - 1, a) is always odd, so the relation
        // rewrites Sq^k through strictly smaller indices.
        for (const SqComposite& u : adem_decompose(a).summands) {
            SqComposite ub = u;
            ub.push_back(b);
            xor_summand(w.summands, std::move(ub));
        }
        for (int c = 1; 2 * c <= a; ++c) {
            if (!binom_odd(b - c - 1, a - 2 * c)) continue;
            for (const SqComposite& u : adem_decompose(k - c).summands)
                for (const SqComposite& v : adem_decompose(c).summands) {
                    SqComposite uv = u;
                    uv.insert(uv.end(), v.begin(), v.end());
                    xor_summand(w.summands, std::move(uv));
                }
        }
        std::sort(w.summands.begin(), w.summands.end());
    }
    return memo.emplace(k, std::move(w)).first->second;
}

WeakCompositions::WeakCompositions(long long n, std::size_t k)
    : parts_(k, 0), n_(n), valid_(n >= 0) {
    if (!valid_) return;
    if (k == 0) {
        valid_ = (n == 0);  // single empty composition of zero
        return;
    }
    parts_[0] = n;
}

void WeakCompositions::next() {
    if (!valid_) return;
    std::size_t k = parts_.size();
    if (k == 0 || parts_[k - 1] == n_) {
        valid_ = false;
        return;
    }
    std::size_t h = k - 1;
    do {
        --h;
    } while (parts_[h] == 0);
    long long rest = parts_[k - 1];
    parts_[k - 1] = 0;
    parts_[h] -= 1;
    parts_[h + 1] = rest + 1;
}

// ---------------------------------------------------------------------------
// Table construction

class TableBuilder {
  public:
    TableBuilder(const RingBasis& rb, bool strict)
        : rb_(rb), gens_(rb.pres().gens()), strict_(strict), ev_(rb, t_) {
        t_.gens_ = &gens_;
    }

    SquareTable run() {
        axioms();
        user_entries();
        sq1_closure();
        mark_missing_powers();
        derive_nonpowers();
        return std::move(t_);
    }

  private:
    const RingBasis& rb_;
    const GeneratorTable& gens_;
    bool strict_;
    SquareTable t_;
    SqEvaluator ev_;

    bool have(std::size_t g, int i) const { return t_.entries_.count({g, i}) != 0; }
    bool settled(std::size_t g, int i) const {
        return have(g, i) || t_.unavailable_.count({g, i}) != 0;
    }
    void set(std::size_t g, int i, Gf2Poly v, SquareTable::Provenance prov) {
        t_.entries_.insert_or_assign({g, i}, SquareTable::Entry{std::move(v), prov});
    }

    Gf2Poly gen_class(std::size_t g) const {
        return Gf2Poly::monomial(Monomial::generator(gens_, g, 1));
    }

    void axioms() {
        int dim = rb_.pres().dim();
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            int dg = gens_[g].degree;
            set(g, 0, rb_.normal_form_poly(gen_class(g)), SquareTable::Provenance::Axiom);
            Gf2Poly top = 2 * dg <= dim ? rb_.normal_form_poly(gen_class(g) * gen_class(g))
                                        : Gf2Poly::zero(gens_.size());
            set(g, dg, std::move(top), SquareTable::Provenance::Axiom);
            // everything landing above the top degree or in a trivial degree vanishes
            for (int i = 1; i < dg; ++i)
                if (dg + i > dim || rb_.at(dg + i).dim() == 0)
                    set(g, i, Gf2Poly::zero(gens_.size()), SquareTable::Provenance::Derived);
        }
    }

    void user_entries() {
        int dim = rb_.pres().dim();
        for (const auto& [key, raw] : rb_.pres().squares()) {
            auto [g, i] = key;
            int dg = gens_[g].degree;
            Gf2Poly v = dg + i > dim ? Gf2Poly::zero(gens_.size()) : rb_.normal_form_poly(raw);
            if (i == dg) {
                if (!(v == t_.entries_.at({g, i}).value))
                    throw ManifestError(entry_name(gens_, g, i) +
                                        " contradicts the top-square axiom");
                continue;
            }
            set(g, i, std::move(v), SquareTable::Provenance::User);
        }
    }

    // Generators that appear as Sq^1 of another generator: Sq^1 h vanishes,
    // and when 2^j + 1 = |h| the entry Sq^{2^j} h is pinned down by solving
    // Sq^1 u = h^2 (the unique-solution case only).
    void sq1_closure() {
        std::set<std::size_t> images;
        for (const auto& [key, e] : t_.entries_) {
            if (key.second != 1) continue;
            const Gf2Poly& v = e.value;
            if (v.term_count() != 1) continue;
            const auto& [m, c] = *v.terms().begin();
            if (!c.is_one() || m.total_exponent() != 1) continue;
            for (std::size_t h = 0; h < gens_.size(); ++h)
                if (m[h] == 1) images.insert(h);
        }
        for (std::size_t h : images) {
            if (!have(h, 1)) set(h, 1, Gf2Poly::zero(gens_.size()), SquareTable::Provenance::Derived);
        }
        for (std::size_t h : images) {
            int dh = gens_[h].degree;
            for (int q = 2; q < dh; q *= 2) {
                if (settled(h, q) || q + 1 != dh) continue;
                solve_power(h, q);
            }
        }
    }

    // Solve Sq^1 u = h^2 over the basis of degree |h| + q, q + 1 = |h|.
    void solve_power(std::size_t h, int q) {
        int dh = gens_[h].degree;
        long long src = static_cast<long long>(dh) + q;
        if (src + 1 > rb_.pres().dim()) return;  // handled by the above-top rule
        const DegreeBasis& dom = rb_.at(src);
        const DegreeBasis& img = rb_.at(src + 1);
        std::vector<BitRow> cols(dom.dim(), BitRow(img.dim()));
        for (std::size_t s = 0; s < dom.dim(); ++s) {
            RingBasis::Coords c;
            try {
                c = ev_.sq(Gf2Poly::monomial(dom.basis_monomial(s)), 1);
            } catch (const TableIncomplete& e) {
                t_.unavailable_.insert({{h, q}, e.entry});
                return;
            }
            for (std::size_t t = 0; t < c.c.size(); ++t) {
                if (c.c[t].is_zero()) continue;
                if (!c.c[t].is_one()) return;  // parametric matrix: leave missing
                cols[s].set(t);
            }
        }
        std::vector<BitRow> rows(img.dim(), BitRow(dom.dim()));
        for (std::size_t s = 0; s < dom.dim(); ++s)
            for (std::size_t t = 0; t < img.dim(); ++t)
                if (cols[s].get(t)) rows[t].set(s);

        RingBasis::Coords rhs = rb_.normal_form(gen_class(h) * gen_class(h));
        std::vector<ParamPoly> b(img.dim(), ParamPoly::zero());
        for (std::size_t t = 0; t < rhs.c.size(); ++t) b[t] = rhs.c[t];
        std::vector<ParamPoly> sol;
        if (solve_gf2(rows, dom.dim(), b, sol) != SolveStatus::Unique) return;

        Gf2Poly u = Gf2Poly::zero(gens_.size());
        for (std::size_t s = 0; s < dom.dim(); ++s)
            if (!sol[s].is_zero()) u.add_term(dom.basis_monomial(s), sol[s]);
        set(h, q, std::move(u), SquareTable::Provenance::Derived);
    }

    void mark_missing_powers() {
        std::vector<std::pair<int, std::size_t>> gaps;
        for (std::size_t g = 0; g < gens_.size(); ++g)
            for (int q = 1; q < gens_[g].degree; q *= 2)
                if (!settled(g, q)) {
                    t_.unavailable_.insert({{g, q}, entry_name(gens_, g, q)});
                    gaps.emplace_back(q, g);
                }
        std::sort(gaps.begin(), gaps.end());
        for (const auto& [q, g] : gaps) t_.missing_.push_back(entry_name(gens_, g, q));
        if (strict_ && !t_.missing_.empty()) {
            std::string all;
            for (const auto& s : t_.missing_) {
                if (!all.empty()) all += ", ";
                all += s;
            }
            throw MissingEntry("square table has unresolved entries: " + all);
        }
    }

    void derive_nonpowers() {
        int maxdeg = 0;
        for (std::size_t g = 0; g < gens_.size(); ++g)
            maxdeg = std::max(maxdeg, gens_[g].degree);
        for (int i = 2; i < maxdeg; ++i) {
            if (is_pow2(i)) continue;
            const AdemWord& word = adem_decompose(i);
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                if (i >= gens_[g].degree || settled(g, i)) continue;
                try {
                    set(g, i, apply_word(ev_, word, t_.entries_.at({g, 0}).value),
                        SquareTable::Provenance::Derived);
                } catch (const TableIncomplete& e) {
                    t_.unavailable_.insert({{g, i}, e.entry});
                }
            }
        }
    }
};

SquareTable SquareTable::build(const RingBasis& basis, bool strict) {
    return TableBuilder(basis, strict).run();
}

const SquareTable::Entry* SquareTable::find(std::size_t g, int i) const {
    auto it = entries_.find({g, i});
    return it == entries_.end() ? nullptr : &it->second;
}

const Gf2Poly& SquareTable::at(std::size_t g, int i) const {
    if (const Entry* e = find(g, i)) return e->value;
    auto it = unavailable_.find({g, i});
    throw TableIncomplete(it != unavailable_.end() ? it->second : entry_name(*gens_, g, i));
}

bool SquareTable::complete_up_to(int n) const {
    for (std::size_t g = 0; g < gens_->size(); ++g) {
        int top = std::min(n, (*gens_)[g].degree);
        for (int i = 0; i <= top; ++i)
            if (!entries_.count({g, i})) return false;
    }
    return true;
}

int SquareTable::max_complete_index() const {
    int lim = 0;
    for (std::size_t g = 0; g < gens_->size(); ++g) lim = std::max(lim, (*gens_)[g].degree);
    int best = 0;
    for (int n = 1; n <= lim; ++n) {
        if (!complete_up_to(n)) break;
        best = n;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Evaluation

Gf2Poly SqEvaluator::sq_power(std::size_t g, long long e, long long n) const {
    auto key = std::make_tuple(g, e, n);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    const GeneratorTable& gens = basis_.pres().gens();
    long long dg = gens[g].degree;
    std::size_t width = gens.size();
    Gf2Poly acc = Gf2Poly::zero(width);
    if (n < 0 || n > e * dg || e < 0) return cache_[key] = std::move(acc);
    if (e == 0) return cache_[key] = (n == 0 ? Gf2Poly::unit(width) : std::move(acc));

    // Pick a multiplicity c_i for each table component Sq^i g (1 <= i <= |g|)
    // with sum i*c_i = n and sum c_i <= e; the remaining e - sum c_i factors
    // are Sq^0 g = g. The term count is the multinomial coefficient, so only
    // carry-free splits of e survive mod 2.
    std::vector<long long> mult(dg + 1, 0);
    long long top = std::min(dg, n);
    auto emit = [&](long long used) {
        std::vector<long long> parts{e - used};
        for (long long i = 1; i <= top; ++i)
            if (mult[i]) parts.push_back(mult[i]);
        if (!multinomial_odd(parts)) return;
        Gf2Poly term = e - used > 0
                           ? Gf2Poly::monomial(Monomial::generator(
                                 gens, g, static_cast<uint32_t>(e - used)))
                           : Gf2Poly::unit(width);
        for (long long i = 1; i <= top && !term.is_zero(); ++i) {
            if (!mult[i]) continue;
            term = term * pow(table_.at(g, static_cast<int>(i)), static_cast<unsigned>(mult[i]));
        }
        acc += term;
    };
    auto rec = [&](auto&& self, long long i, long long rem, long long used) -> void {
        if (i == 0) {
            if (rem == 0) emit(used);
            return;
        }
        if (rem > i * (e - used)) return;  // parts <= i cannot reach rem
        for (long long c = 0; c * i <= rem && used + c <= e; ++c) {
            mult[i] = c;
            self(self, i - 1, rem - c * i, used + c);
        }
        mult[i] = 0;
    };
    rec(rec, top, n, 0);
    return cache_[key] = std::move(acc);
}

Gf2Poly SqEvaluator::sq_power_naive(std::size_t g, long long e, long long n) const {
    const GeneratorTable& gens = basis_.pres().gens();
    long long dg = gens[g].degree;
    std::size_t width = gens.size();
    Gf2Poly acc = Gf2Poly::zero(width);
    if (n < 0 || e < 0) return acc;
    for (WeakCompositions wc(n, static_cast<std::size_t>(e)); wc.valid(); wc.next()) {
        Gf2Poly term = Gf2Poly::unit(width);
        for (long long p : wc.parts()) {
            if (p > dg) {
                term = Gf2Poly::zero(width);
                break;
            }
            term = term * (p == 0 ? Gf2Poly::monomial(Monomial::generator(gens, g, 1))
                                  : table_.at(g, static_cast<int>(p)));
            if (term.is_zero()) break;
        }
        acc += term;
    }
    return acc;
}

Gf2Poly SqEvaluator::sq_monomial_raw(const Monomial& m, long long n) const {
    const GeneratorTable& gens = basis_.pres().gens();
    std::size_t width = gens.size();
    std::vector<std::pair<std::size_t, uint32_t>> slots;
    for (std::size_t g = 0; g < width; ++g)
        if (m[g]) slots.emplace_back(g, m[g]);

    std::vector<long long> cap(slots.size() + 1, 0);  // suffix capacity
    for (std::size_t k = slots.size(); k-- > 0;)
        cap[k] = cap[k + 1] +
                 static_cast<long long>(slots[k].second) * gens[slots[k].first].degree;

    Gf2Poly acc = Gf2Poly::zero(width);
    auto rec = [&](auto&& self, std::size_t k, long long rem, const Gf2Poly& partial) -> void {
        if (rem > cap[k]) return;
        if (k == slots.size()) {
            acc += partial;
            return;
        }
        auto [g, e] = slots[k];
        long long top = std::min(rem, static_cast<long long>(e) * gens[g].degree);
        for (long long ng = 0; ng <= top; ++ng) {
            Gf2Poly f = sq_power(g, e, ng);
            if (f.is_zero()) continue;
            self(self, k + 1, rem - ng, partial * f);
        }
    };
    if (n >= 0) rec(rec, 0, n, Gf2Poly::unit(width));
    return acc;
}

namespace {

Gf2Poly raw_sq(const SqEvaluator& ev, const RingBasis& basis, const Gf2Poly& cls, long long n) {
    std::size_t width = cls.width();
    if (n < 0) throw Error("square index must be nonnegative");
    if (cls.is_zero()) return Gf2Poly::zero(width);
    long long d = *cls.degree();
    if (n > d) return Gf2Poly::zero(width);  // instability
    if (d + n > basis.pres().dim())
        throw DegreeOverflow("Sq^" + std::to_string(n) + " on degree " + std::to_string(d) +
                             " lands above dimension " + std::to_string(basis.pres().dim()));
    Gf2Poly acc = Gf2Poly::zero(width);
    for (const auto& [m, c] : cls.terms()) acc += ev.sq_monomial_raw(m, n) * c;
    return acc;
}

}  // namespace

Gf2Poly SqEvaluator::sq_class(const Gf2Poly& cls, long long n) const {
    return basis_.normal_form_poly(raw_sq(*this, basis_, cls, n));
}

RingBasis::Coords SqEvaluator::sq(const Gf2Poly& cls, long long n) const {
    return basis_.normal_form(raw_sq(*this, basis_, cls, n));
}

Gf2Poly apply_word(const SqEvaluator& ev, const AdemWord& word, const Gf2Poly& cls) {
    Gf2Poly acc = Gf2Poly::zero(cls.width());
    for (const SqComposite& comp : word.summands) {
        Gf2Poly cur = cls;
        for (auto it = comp.rbegin(); it != comp.rend() && !cur.is_zero(); ++it)
            cur = ev.sq_class(cur, *it);
        acc += cur;
    }
    return acc;
}

}  // namespace sqtop
