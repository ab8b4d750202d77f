#pragma once

#include <array>
#include <cstdint>

namespace parity31 {

/// Classification data of an odd m > 1 coprime to 31, everything the
/// 2-adic series formulas consume.
///
/// omega[j] counts distinct prime factors in class j (distinct primes, no
/// multiplicity); ell counts with multiplicity and equals the orbit index
/// of m mod 31. alpha_prime and a_prime are the weighted class counts
///     alpha' = 2 w5 - 2 w1 + w4 - w2 - 2 ell   (mod 12)
///     a'     =   w5 -   w1 + w2 - w4 - 4 ell   (mod 12)
/// and t is the gap between the two power-of-3 exponents:
///     t = ceil(omega/2) - ceil((w2+w4)/2)  restricted to omega = w1+w2+w4+w5.
struct OddProfile {
    std::array<int, 6> omega;
    int omega_total;
    int ell;
    int alpha_prime;
    int a_prime;
    int t;

    int w15() const { return omega[1] + omega[5]; }
    int w24() const { return omega[2] + omega[4]; }
};

/// ceil(x/2 - 1) for x >= 0; equals -1 at x = 0.
constexpr int ceil_half_minus_one(int x) { return x == 0 ? -1 : (x - 1) / 2; }

/// Requires m odd, m >= 3, coprime to 31.
OddProfile profile(uint64_t m);

}  // namespace parity31
