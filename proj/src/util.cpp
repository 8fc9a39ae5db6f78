#include "sqtop/util.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <vector>

#include "sqtop/errors.hpp"

namespace sqtop {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads < 1) threads = 1;
    std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    pool.reserve(t);
    for (std::size_t w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += t) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

uint64_t compositions_count(long long n, long long k) {
    if (n < 0 || k < 0) throw Error("compositions_count: negative argument");
    if (k == 0) return n == 0 ? 1 : 0;
    // C(n+k-1, k-1) with overflow checking.
    unsigned long long num = 1;
    long long top = n + k - 1, r = std::min<long long>(k - 1, n);
    for (long long i = 1; i <= r; ++i) {
        unsigned __int128 next = static_cast<unsigned __int128>(num) * (top - r + i);
        next /= i;
        if (next > UINT64_MAX) throw Error("compositions_count overflow");
        num = static_cast<unsigned long long>(next);
    }
    return num;
}

}  // namespace sqtop
