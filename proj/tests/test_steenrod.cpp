#include <random>
#include <string>

#include "doctest.h"
#include "sqtop/corpus.hpp"
#include "sqtop/steenrod.hpp"
#include "sqtop/util.hpp"
#include "support.hpp"

using namespace sqtop;
using sqtop::test::make_pres;
using sqtop::test::pc;
using sqtop::test::random_nonzero_class;

namespace {

struct Ring {
    Presentation pres;
    RingBasis rb;
    SquareTable table;
    SqEvaluator ev;

    explicit Ring(Presentation p)
        : pres(std::move(p)), rb(RingBasis::compute(pres)), table(SquareTable::build(rb)),
          ev(rb, table) {}
};

const Ring& evi() {
    static Ring r(builtin("evi").presentation);
    return r;
}

const Ring& hp2() {
    static Ring r(builtin("hp2").presentation);
    return r;
}

std::string sq_str(const Ring& r, const std::string& cls, long long n) {
    Gf2Poly val = r.ev.sq_class(pc(r.pres, cls), n);
    return render(val, r.pres.gens(), r.pres.params());
}

}  // namespace

TEST_CASE("table provenance: axioms, user entries, derived entries") {
    const Ring& r = evi();
    auto g = [&](const char* name) { return *r.pres.gens().find(name); };

    // Sq^0 = id and the top square are axioms.
    REQUIRE(r.table.find(g("y2"), 0) != nullptr);
    CHECK(r.table.find(g("y2"), 0)->prov == SquareTable::Provenance::Axiom);
    CHECK(r.table.at(g("y2"), 0) == pc(r.pres, "y2"));
    CHECK(r.table.find(g("y2"), 2)->prov == SquareTable::Provenance::Axiom);
    CHECK(r.table.at(g("y2"), 2) == pc(r.pres, "y2^2"));

    // Sq^1 y2 = y3 comes from the manifest.
    CHECK(r.table.find(g("y2"), 1)->prov == SquareTable::Provenance::User);
    CHECK(r.table.at(g("y2"), 1) == pc(r.pres, "y3"));

    // y3 = Sq^1 y2 forces Sq^1 y3 = 0 and Sq^2 y3 = y2*y3, both derived.
    CHECK(r.table.find(g("y3"), 1)->prov == SquareTable::Provenance::Derived);
    CHECK(r.table.at(g("y3"), 1).is_zero());
    CHECK(r.table.find(g("y3"), 2)->prov == SquareTable::Provenance::Derived);
    CHECK(r.table.at(g("y3"), 2) == pc(r.pres, "y2*y3"));

    // find() on an absent entry is null, not a throw.
    CHECK(r.table.find(g("y2"), 64) == nullptr);
}

TEST_CASE("the one missing power-of-two entry is reported lazily") {
    const Ring& r = evi();
    CHECK(r.table.missing() == std::vector<std::string>{"Sq^16 y20"});
    CHECK(r.table.complete_up_to(15));
    CHECK_FALSE(r.table.complete_up_to(16));
    CHECK(r.table.max_complete_index() == 15);

    std::size_t y20 = *r.pres.gens().find("y20");
    try {
        r.table.at(y20, 16);
        FAIL("expected TableIncomplete");
    } catch (const TableIncomplete& e) {
        CHECK(e.entry == "Sq^16 y20");
        CHECK(std::string(e.what()) == "square table incomplete: missing Sq^16 y20");
    }
    // Derived non-powers needing the missing root are unavailable too.
    CHECK_THROWS_AS(r.table.at(y20, 17), TableIncomplete);
    // Evaluation that needs it propagates the same diagnosis.
    CHECK_THROWS_AS(r.ev.sq_class(pc(r.pres, "y20"), 16), TableIncomplete);

    // Strict construction refuses to defer.
    CHECK_THROWS_AS(SquareTable::build(r.rb, /*strict=*/true), MissingEntry);
}

TEST_CASE("complete tables have no missing entries") {
    for (const char* name : {"rp15", "cp4", "hp2", "op2", "op2xop2", "eiii-mod2"}) {
        Ring r(builtin(name).presentation);
        CAPTURE(name);
        CHECK(r.table.missing().empty());
        // Complete means: every index up to the largest generator degree.
        int lim = 0;
        for (std::size_t g = 0; g < r.pres.gens().size(); ++g)
            lim = std::max(lim, r.pres.gens()[g].degree);
        CHECK(r.table.max_complete_index() == lim);
        CHECK_NOTHROW(SquareTable::build(r.rb, /*strict=*/true));
    }
}

TEST_CASE("a contradictory top square is rejected") {
    // |x| = 2, so Sq^2 x must be x^2; claim x*y-ish garbage instead.
    auto p = make_pres("bad", Mode::Gf2, 8, {{"x", 2}, {"z", 4}}, {}, {},
                       {{"x", {{2, "z"}}}});
    RingBasis rb = RingBasis::compute(p);
    CHECK_THROWS_AS(SquareTable::build(rb), ManifestError);
    // The consistent claim is accepted silently.
    auto ok = make_pres("ok", Mode::Gf2, 8, {{"x", 2}, {"z", 4}}, {}, {},
                        {{"x", {{2, "x^2"}}}});
    CHECK_NOTHROW(SquareTable::build(RingBasis::compute(ok)));
}

TEST_CASE("binomial pattern on a truncated line (Lucas oracle)") {
    Ring r(builtin("rp15").presentation);
    for (long long j = 0; j <= 15; ++j) {
        Gf2Poly xj = r.rb.normal_form_poly(pow(pc(r.pres, "x"), static_cast<unsigned>(j)));
        for (long long k = 0; k <= j && j + k <= 15; ++k) {
            Gf2Poly got = r.ev.sq_class(xj, k);
            Gf2Poly expected =
                binom_odd(j, k) ? r.rb.normal_form_poly(pow(pc(r.pres, "x"),
                                                            static_cast<unsigned>(j + k)))
                                : Gf2Poly::zero(1);
            CAPTURE(j);
            CAPTURE(k);
            CHECK(got == expected);
        }
    }
}

TEST_CASE("sq_power agrees with the brute-force composition oracle") {
    const Ring& r = evi();
    for (std::size_t g = 0; g < r.pres.gens().size(); ++g)
        for (long long e = 0; e <= 6; ++e)
            for (long long n = 0; n <= 8; ++n) {
                CAPTURE(g);
                CAPTURE(e);
                CAPTURE(n);
                CHECK(r.ev.sq_power(g, e, n) == r.ev.sq_power_naive(g, e, n));
            }
}

TEST_CASE("axioms on random classes: Sq^0, instability, top square") {
    const Ring& r = evi();
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        long long d = 0;
        Gf2Poly x = random_nonzero_class(r.rb, 32, rng, &d);
        if (x.is_zero()) continue;
        CHECK(r.ev.sq_class(x, 0) == x);
        CHECK(r.ev.sq_class(x, d + 1).is_zero());
        CHECK(r.ev.sq_class(x, d + 7).is_zero());
        CHECK(r.ev.sq_class(x, d) == r.rb.normal_form_poly(x * x));
    }
}

TEST_CASE("Cartan formula on random pairs") {
    std::mt19937_64 rng(515);
    for (const Ring* rp : {&evi(), &hp2()}) {
        const Ring& r = *rp;
        long long dim = r.pres.dim();
        for (int trial = 0; trial < 60; ++trial) {
            long long dx = 0, dy = 0;
            Gf2Poly x = random_nonzero_class(r.rb, dim / 3, rng, &dx);
            Gf2Poly y = random_nonzero_class(r.rb, dim / 3, rng, &dy);
            if (x.is_zero() || y.is_zero()) continue;
            long long room = dim - dx - dy;
            if (room < 0) continue;
            long long n = static_cast<long long>(rng() % 9);
            if (n > room) n = room;
            Gf2Poly lhs = r.ev.sq_class(r.rb.normal_form_poly(x * y), n);
            Gf2Poly rhs(r.pres.gens().size());
            for (long long i = 0; i <= n; ++i)
                rhs += r.ev.sq_class(x, i) * r.ev.sq_class(y, n - i);
            CHECK(lhs == r.rb.normal_form_poly(rhs));
        }
    }
}

TEST_CASE("Sq^1 is a derivation and squares to zero") {
    const Ring& r = evi();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        long long dx = 0, dy = 0;
        Gf2Poly x = random_nonzero_class(r.rb, 20, rng, &dx);
        Gf2Poly y = random_nonzero_class(r.rb, 20, rng, &dy);
        if (x.is_zero() || y.is_zero()) continue;
        if (dx + dy + 1 > r.pres.dim()) continue;
        Gf2Poly leibniz = r.ev.sq_class(x, 1) * y + x * r.ev.sq_class(y, 1);
        CHECK(r.ev.sq_class(r.rb.normal_form_poly(x * y), 1) ==
              r.rb.normal_form_poly(leibniz));
        if (dx + 2 <= r.pres.dim())
            CHECK(r.ev.sq_class(r.ev.sq_class(x, 1), 1).is_zero());
    }
}

TEST_CASE("closed forms of derived squares on the rank-5 example") {
    const Ring& r = evi();
    CHECK(sq_str(r, "y12", 3) == "y2^6*y3 + y3*y12");
    CHECK(sq_str(r, "y16", 3) == "0");
    CHECK(sq_str(r, "y20", 3) == "y2^10*y3 + y3*y20");
    CHECK(sq_str(r, "y12", 6) == "y2^9 + y2^3*y12 + a1*y3^2*y12 + (1+a1) * y2*y16");
    CHECK(sq_str(r, "y16", 6) == "y2^2*y3^2*y12 + y2^3*y16");
    CHECK(sq_str(r, "y20", 6) ==
          "y2^13 + y2^7*y12 + (m1+n1) * y2*y12^2 + (1+m1+n1) * y2^5*y16 + (m1+n1) * y3^2*y20");
    CHECK(sq_str(r, "y20", 7) == "y2^12*y3 + y2^6*y3*y12");

    // The degree-17 images contain the cube of an exterior generator, which
    // the ring kills; the closed forms collapse to zero classes.
    CHECK(r.rb.normal_form_poly(pc(r.pres, "a1*y2^4*y3^3")).is_zero());
    CHECK(sq_str(r, "y12", 5) == "0");
    CHECK(r.rb.normal_form_poly(pc(r.pres, "m1*y2^8*y3^3 + n1*y2^2*y3^3*y12")).is_zero());
    CHECK(sq_str(r, "y20", 5) == "0");
}

TEST_CASE("parametric square entries from the manifest evaluate classwise") {
    Ring r(builtin("eiii-mod2").presentation);
    CHECK(r.table.at(*r.pres.gens().find("w"), 2) == pc(r.pres, "a*t^5 + b*t*w"));
    CHECK(sq_str(r, "t^11*w", 2) == "(1+b) * w^4");
    CHECK(sq_str(r, "t^3*w^3", 2) == "(1+b) * w^4");
    CHECK(sq_str(r, "t^10*w", 4) == "(1+d) * w^4");
    CHECK(sq_str(r, "t^2*w^3", 4) == "(1+a+b+d) * w^4");
}

TEST_CASE("degree guard rails") {
    Ring r(builtin("rp15").presentation);
    // Landing above the dimension is an input error...
    CHECK_THROWS_AS(r.ev.sq_class(pc(r.pres, "x^14"), 2), DegreeOverflow);
    // ...but instability keeps n > d legal at any n.
    CHECK(r.ev.sq_class(pc(r.pres, "x^14"), 40).is_zero());
    CHECK_THROWS_AS(r.ev.sq_class(pc(r.pres, "x"), -1), Error);
    CHECK(r.ev.sq_class(Gf2Poly::zero(1), 5).is_zero());
    // Inhomogeneous input is rejected up front.
    CHECK_THROWS_AS(r.ev.sq_class(pc(r.pres, "x + x^2"), 1), InhomogeneousInput);
}

TEST_CASE("sq() returns coordinates in the target degree") {
    const Ring& r = evi();
    auto coords = r.ev.sq(pc(r.pres, "y2"), 1);
    CHECK(coords.degree == 3);
    REQUIRE(coords.c.size() == 1);  // b_3 = 1
    CHECK(coords.c[0].is_one());
    CHECK(r.ev.sq(pc(r.pres, "y3"), 1).is_zero());
}

TEST_CASE("evaluator results are reproducible across instances") {
    // Fresh evaluators (fresh caches) give identical values.
    Ring a(builtin("evi").presentation);
    Ring b(builtin("evi").presentation);
    for (long long n : {2, 4, 6, 8}) {
        Gf2Poly va = a.ev.sq_class(pc(a.pres, "y2^3*y12"), n);
        Gf2Poly vb = b.ev.sq_class(pc(b.pres, "y2^3*y12"), n);
        CHECK(va == vb);
    }
}
