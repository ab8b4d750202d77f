#pragma once

#include <cstdint>
#include <vector>

namespace parity31 {

/// Ground-truth construction of the partition set of defining_poly() on
/// [1, N], straight from the defining congruence: the product of
/// 1/(1 - z^a) over chosen a must reproduce the polynomial's coefficients
/// mod 2. Greedy and quadratic (word-packed), which is fine for a trust
/// anchor. Read-only after construction.
class OracleSet {
public:
    explicit OracleSet(uint64_t limit);

    uint64_t limit() const { return limit_; }

    bool member(uint64_t n) const;

    /// Parity of the number of partitions of n into parts from the set.
    bool partition_parity(uint64_t n) const;

    /// Exact sum of the divisors of n that lie in the set; n <= limit.
    uint64_t sigma(uint64_t n) const;

    /// |set intersect [1, x]|.
    uint64_t count_leq(uint64_t x) const;

private:
    bool series_bit(uint64_t i) const;
    void xor_shifted_self(uint64_t s);

    uint64_t limit_;
    std::vector<uint64_t> series_;   // running product coefficients mod 2
    std::vector<uint64_t> members_;
};

}  // namespace parity31
