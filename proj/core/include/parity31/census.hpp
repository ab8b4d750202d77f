#pragma once

#include <cstdint>
#include <vector>

#include "parity31/membership.hpp"

namespace parity31 {

/// Aggregated counts at a checkpoint x: the full count A, the four-way
/// split by (class-3 count, class-2 + class-4 count) of the odd part, and
/// the normalized ratios c = A (log x)^{1/4} / x, c1 likewise for A1.
struct CensusRow {
    uint64_t x = 0;
    uint64_t a = 0;
    uint64_t a1 = 0;
    uint64_t a2 = 0;
    uint64_t a3 = 0;
    uint64_t a4 = 0;
    double c = 0.0;
    double c1 = 0.0;
};

struct CensusConfig {
    uint64_t x_max = 0;
    std::vector<uint64_t> checkpoints;  // ascending, each <= x_max
    unsigned threads = 0;               // 0 = hardware concurrency
    int block_bits = 22;                // values per sieve block
};

/// Count members up to x_max by sieving class counts per block and reading
/// the series bit for every n; emits one row per checkpoint. Workers run
/// data-parallel over disjoint blocks, merged in block order so results
/// are deterministic.
std::vector<CensusRow> run_census(const CensusConfig& cfg, const Membership& membership);

/// Count of n = 2^{w3(m)} m <= x_max where m is odd, coprime to 31, free
/// of class-0 prime factors, and w3(m) is its number of distinct class-3
/// primes. m = 1 (the empty product, n = 1) is counted.
uint64_t census_g(uint64_t x_max, unsigned threads = 0);

}  // namespace parity31
