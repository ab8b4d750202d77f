#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace parity31 {

/// All primes <= limit, ascending.
std::vector<uint32_t> primes_up_to(uint32_t limit);

/// Smallest-prime-factor table over [0, limit]. Factoring a covered n is a
/// chain of spf lookups. Immutable after construction.
class FactorSieve {
public:
    explicit FactorSieve(uint32_t limit);

    uint32_t limit() const { return static_cast<uint32_t>(spf_.size()) - 1; }
    uint32_t spf(uint32_t n) const;

    std::vector<std::pair<uint64_t, int>> factorize(uint32_t n) const;

private:
    std::vector<uint32_t> spf_;
};

/// Distinct prime factors with multiplicities, ascending. Uses a resident
/// spf table for small n and trial division by cached primes above it;
/// inputs needing primes beyond 10^8 (semiprimes past 10^16) raise
/// overflow_error. Safe for concurrent use.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

}  // namespace parity31
