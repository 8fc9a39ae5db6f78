#include <numeric>

#include "doctest.h"
#include "sqtop/corpus.hpp"
#include "sqtop/steenrod.hpp"
#include "sqtop/util.hpp"
#include "support.hpp"

using namespace sqtop;
using sqtop::test::make_pres;
using sqtop::test::pc;

TEST_CASE("powers of two decompose as themselves") {
    for (int k : {1, 2, 4, 8, 16, 32}) {
        const AdemWord& w = adem_decompose(k);
        REQUIRE(w.summands.size() == 1);
        CHECK(w.summands[0] == SqComposite{k});
    }
}

TEST_CASE("known non-power decompositions") {
    // Sq^3 = Sq^1 Sq^2.
    CHECK(adem_decompose(3).summands == std::vector<SqComposite>{{1, 2}});
    // Sq^5 = Sq^1 Sq^4.
    CHECK(adem_decompose(5).summands == std::vector<SqComposite>{{1, 4}});
    // Sq^6 = Sq^2 Sq^4 + Sq^5 Sq^1 = Sq^2 Sq^4 + Sq^1 Sq^4 Sq^1.
    CHECK(adem_decompose(6).summands == std::vector<SqComposite>{{1, 4, 1}, {2, 4}});
    // Sq^7 = Sq^1 Sq^2 Sq^4.
    CHECK(adem_decompose(7).summands == std::vector<SqComposite>{{1, 2, 4}});
}

TEST_CASE("every decomposition letter is a power of two and sums to k") {
    for (int k = 1; k <= 64; ++k) {
        const AdemWord& w = adem_decompose(k);
        CHECK(!w.summands.empty());
        for (const SqComposite& comp : w.summands) {
            long long total = std::accumulate(comp.begin(), comp.end(), 0ll);
            CHECK(total == k);
            for (int letter : comp) {
                CHECK(letter > 0);
                CHECK((letter & (letter - 1)) == 0);
            }
        }
        // Canonical: sorted, duplicate-free.
        for (std::size_t i = 0; i + 1 < w.summands.size(); ++i)
            CHECK(w.summands[i] < w.summands[i + 1]);
    }
}

TEST_CASE("decompositions are memoized") {
    const AdemWord& a = adem_decompose(12);
    const AdemWord& b = adem_decompose(12);
    CHECK(&a == &b);
}

TEST_CASE("Adem words reproduce binomial squares on a truncated line") {
    // On F2[x]/(x^31), |x| = 1: Sq^k x^j = C(j, k) x^(j+k). Every composite
    // of the decomposition word is evaluated through power-of-two squares
    // only, so agreement here validates the Adem recursion end to end.
    auto p = make_pres("line", Mode::Gf2, 30, {{"x", 1}}, {"x^31"});
    RingBasis rb = RingBasis::compute(p);
    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);

    for (int k = 1; k <= 12; ++k) {
        const AdemWord& w = adem_decompose(k);
        for (long long j = 1; j + k <= 30; ++j) {
            Gf2Poly xj = pow(pc(p, "x"), static_cast<unsigned>(j));
            Gf2Poly got = apply_word(ev, w, rb.normal_form_poly(xj));
            Gf2Poly expected = binom_odd(j, k)
                                   ? rb.normal_form_poly(pow(pc(p, "x"), static_cast<unsigned>(j + k)))
                                   : Gf2Poly::zero(1);
            CHECK(got == expected);
        }
    }
}

TEST_CASE("weak compositions enumerate descending and exhaustively") {
    WeakCompositions it(2, 4);
    std::vector<std::vector<long long>> seen;
    for (; it.valid(); it.next()) seen.push_back(it.parts());
    std::vector<std::vector<long long>> expected = {
        {2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 2, 0, 0},
        {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}};
    CHECK(seen == expected);

    // Parts always sum to n; count matches the closed form.
    for (long long n = 0; n <= 7; ++n)
        for (std::size_t k = 1; k <= 4; ++k) {
            uint64_t count = 0;
            for (WeakCompositions c(n, k); c.valid(); c.next()) {
                CHECK(std::accumulate(c.parts().begin(), c.parts().end(), 0ll) == n);
                ++count;
            }
            CHECK(count == compositions_count(n, k));
        }
}

TEST_CASE("weak composition edge cases") {
    WeakCompositions empty(0, 0);
    CHECK(empty.valid());
    CHECK(empty.parts().empty());
    empty.next();
    CHECK_FALSE(empty.valid());

    WeakCompositions none(3, 0);
    CHECK_FALSE(none.valid());

    WeakCompositions single(5, 1);
    CHECK(single.valid());
    CHECK(single.parts() == std::vector<long long>{5});
    single.next();
    CHECK_FALSE(single.valid());
}
