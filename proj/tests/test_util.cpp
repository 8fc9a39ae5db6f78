#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "sqtop/basis.hpp"
#include "sqtop/poly.hpp"
#include "sqtop/steenrod.hpp"
#include "sqtop/util.hpp"

using namespace sqtop;

TEST_CASE("BitRow basic operations") {
    BitRow row(130);
    CHECK(row.size() == 130);
    CHECK_FALSE(row.any());
    CHECK(row.first_set() == BitRow::npos);

    row.set(0, true);
    row.set(64, true);
    row.set(129, true);
    CHECK(row.get(0));
    CHECK(row.get(64));
    CHECK(row.get(129));
    CHECK_FALSE(row.get(1));
    CHECK(row.any());
    CHECK(row.first_set() == 0);

    row.set(0, false);
    CHECK(row.first_set() == 64);
    row.flip(64);
    CHECK(row.first_set() == 129);

    BitRow other(130);
    other.set(129, true);
    other.set(7, true);
    row ^= other;
    CHECK(row.first_set() == 7);
    CHECK_FALSE(row.get(129));

    BitRow same(130);
    same.set(7, true);
    CHECK(row == same);
}

TEST_CASE("binom_odd matches Pascal's triangle mod 2") {
    // Row-by-row Pascal oracle, no Lucas shortcut.
    std::vector<std::vector<int>> pascal(41);
    for (int n = 0; n <= 40; ++n) {
        pascal[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k)
            pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % 2;
    }
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= 45; ++k) {
            bool expected = k <= n && pascal[n][k] == 1;
            CHECK(binom_odd(n, k) == expected);
        }
}

TEST_CASE("binom_odd handles out-of-range arguments") {
    CHECK(binom_odd(0, 0));
    CHECK_FALSE(binom_odd(3, 5));
    CHECK_FALSE(binom_odd(-1, 0));
    CHECK_FALSE(binom_odd(2, -1));
}

namespace {

BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

bool multinomial_odd_oracle(const std::vector<long long>& parts) {
    long long total = std::accumulate(parts.begin(), parts.end(), 0ll);
    BigInt value = factorial(total);
    for (long long p : parts) value /= factorial(p);
    return value % 2 == 1;
}

}  // namespace

TEST_CASE("multinomial_odd matches the exact factorial oracle") {
    std::mt19937_64 rng(20250801);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<long long> parts(1 + rng() % 5);
        for (auto& p : parts) p = rng() % 12;
        CHECK(multinomial_odd(parts) == multinomial_odd_oracle(parts));
    }
    CHECK(multinomial_odd({}));
    CHECK(multinomial_odd({0, 0}));
    CHECK(multinomial_odd({1, 2}));       // C(3,1) = 3
    CHECK_FALSE(multinomial_odd({2, 2})); // C(4,2) = 6
}

TEST_CASE("compositions_count matches enumeration and the closed form") {
    // Brute enumeration via the iterator for a small grid.
    for (long long n = 0; n <= 6; ++n)
        for (long long k = 0; k <= 5; ++k) {
            uint64_t seen = 0;
            for (WeakCompositions it(n, k); it.valid(); it.next()) ++seen;
            CHECK(compositions_count(n, k) == seen);
        }
    CHECK(compositions_count(2, 4) == 10);
    CHECK(compositions_count(8, 12) == 75582);
    CHECK(compositions_count(0, 0) == 1);
    CHECK(compositions_count(5, 0) == 0);
    CHECK(compositions_count(0, 3) == 1);
}

TEST_CASE("fnv1a64 reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("parallel_for covers every index exactly once, any thread count") {
    const std::size_t n = 1000;
    for (int threads : {1, 2, 4, 8}) {
        std::vector<std::atomic<int>> hits(n);
        parallel_for(n, threads, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (std::size_t i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
    }
}

TEST_CASE("parallel_for produces thread-count-independent results") {
    auto run = [](int threads) {
        std::vector<uint64_t> out(257, 0);
        parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = fnv1a64(std::to_string(i)); });
        return out;
    };
    auto base = run(1);
    CHECK(run(4) == base);
    CHECK(run(8) == base);
}

TEST_CASE("parallel_for tolerates edge sizes") {
    int count = 0;
    parallel_for(0, 4, [&](std::size_t) { ++count; });
    CHECK(count == 0);
    std::atomic<int> one{0};
    parallel_for(1, 8, [&](std::size_t) { one.fetch_add(1); });
    CHECK(one.load() == 1);
}
