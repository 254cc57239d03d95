#pragma once

// Machine-word modular arithmetic, primality, and a small thread helper.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dcl {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod_u64(uint64_t a, uint64_t p) {
    // p prime
    return powmod_u64(a % p, p - 2, p);
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline uint64_t next_prime_u64(uint64_t n) {
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

inline std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    for (uint64_t p = next_prime_u64(lo); p <= hi; p = next_prime_u64(p + 1)) out.push_back(p);
    return out;
}

// Primes just under 2^62 used by the CRT reconstruction engine.
inline const std::vector<uint64_t>& crt_prime_pool() {
    static const std::vector<uint64_t> pool = [] {
        std::vector<uint64_t> v;
        uint64_t p = (1ull << 62) - 1;
        while (v.size() < 24) {
            while (!is_prime_u64(p)) --p;
            v.push_back(p);
            --p;
        }
        return v;
    }();
    return pool;
}

// Deterministic splitmix64 stream; used wherever reproducible "random" points are needed.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
    int64_t in_range(int64_t lo, int64_t hi) { // inclusive
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

// cache directory for expensive build products (group table, symbolic data)
inline std::string cache_dir() {
    const char* env = std::getenv("DCL_CACHE_DIR");
    return env && *env ? std::string(env) : std::string(".");
}

inline void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw < 2 || n < 2) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    unsigned workers = hw < n ? hw : static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace dcl
