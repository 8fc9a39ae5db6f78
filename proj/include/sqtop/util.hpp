#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace sqtop {

// Striped deterministic parallel map; results must be written to
// preallocated, disjoint slots.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

uint64_t fnv1a64(std::string_view bytes);

// Lucas: C(n, k) is odd iff the bits of k are a subset of the bits of n.
inline bool binom_odd(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return false;
    return (~n & k) == 0;
}

// C(e; c_0, ..., c_r) is odd iff the parts add without binary carries.
inline bool multinomial_odd(const std::vector<long long>& parts) {
    long long acc = 0;
    for (long long c : parts) {
        if (acc & c) return false;
        acc |= c;
    }
    return true;
}

// Number of weak compositions of n into k ordered parts: C(n+k-1, k-1).
uint64_t compositions_count(long long n, long long k);

}  // namespace sqtop
