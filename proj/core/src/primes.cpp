#include "parity31/primes.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace parity31 {

std::vector<uint32_t> primes_up_to(uint32_t limit) {
    std::vector<uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (uint32_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (uint64_t q = uint64_t{p} * p; q <= limit; q += p)
            composite[static_cast<size_t>(q)] = true;
    }
    return primes;
}

FactorSieve::FactorSieve(uint32_t limit) : spf_(static_cast<size_t>(limit) + 1, 0) {
    if (limit < 2)
        throw std::invalid_argument("FactorSieve: limit must be at least 2");
    for (uint32_t p = 2; p <= limit; ++p) {
        if (spf_[p] != 0) continue;
        for (uint64_t q = p; q <= limit; q += p)
            if (spf_[static_cast<size_t>(q)] == 0)
                spf_[static_cast<size_t>(q)] = p;
    }
}

uint32_t FactorSieve::spf(uint32_t n) const {
    if (n < 2 || n >= spf_.size())
        throw std::out_of_range("FactorSieve::spf: value outside sieved range");
    return spf_[n];
}

std::vector<std::pair<uint64_t, int>> FactorSieve::factorize(uint32_t n) const {
    std::vector<std::pair<uint64_t, int>> out;
    while (n > 1) {
        uint32_t p = spf(n);
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

namespace {

constexpr uint32_t resident_sieve_limit = 1u << 20;
constexpr uint32_t prime_cache_cap = 100'000'000;

const FactorSieve& resident_sieve() {
    static const FactorSieve sieve(resident_sieve_limit);
    return sieve;
}

uint64_t isqrt(uint64_t n) {
    auto fits = [n](uint64_t r) {
        return static_cast<unsigned __int128>(r) * r <= n;
    };
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && !fits(r)) --r;
    while (fits(r + 1)) ++r;
    return r;
}

// Append-only prime cache for trial division; readers copy a shared_ptr
// snapshot under the same mutex that guards growth.
std::shared_ptr<const std::vector<uint32_t>> primes_at_least(uint32_t limit) {
    static std::mutex mtx;
    static std::shared_ptr<const std::vector<uint32_t>> cache;
    static uint32_t cache_limit = 0;

    std::lock_guard<std::mutex> lock(mtx);
    if (limit > cache_limit) {
        uint32_t next = std::max(cache_limit ? cache_limit * 2 : (1u << 16), limit);
        next = std::min(next, prime_cache_cap);
        cache = std::make_shared<const std::vector<uint32_t>>(primes_up_to(next));
        cache_limit = next;
    }
    return cache;
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    if (n <= resident_sieve().limit())
        return resident_sieve().factorize(static_cast<uint32_t>(n));

    std::vector<std::pair<uint64_t, int>> out;
    uint64_t rem = n;
    uint32_t need = static_cast<uint32_t>(
        std::min<uint64_t>(isqrt(rem) + 1, prime_cache_cap));
    auto primes = primes_at_least(need);
    for (uint32_t p : *primes) {
        if (uint64_t{p} * p > rem) break;
        if (rem % p) continue;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (rem > 1) {
        // Not capped: every prime <= sqrt(rem) was tried, so rem is prime.
        if (need >= prime_cache_cap) {
            uint64_t last = primes->back();
            if (last * last < rem)
                throw std::overflow_error("factorize: input exceeds the factoring bound");
        }
        out.emplace_back(rem, 1);
    }
    return out;
}

}  // namespace parity31
