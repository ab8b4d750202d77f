#pragma once

// Independent reference computations used only by tests. Everything here
// is deliberately brute force and shares no code path with the library
// functions it checks.

#include <array>
#include <cstdint>
#include <vector>

#include "parity31/binary_poly.hpp"
#include "parity31/orbits.hpp"
#include "parity31/primes.hpp"

namespace testing_oracles {

// Smallest beta >= 1 with p | 1 + z^beta, scanning every beta.
inline uint64_t naive_order(const parity31::BinaryPoly& p, uint64_t cap = 1 << 17) {
    using parity31::BinaryPoly;
    for (uint64_t beta = 1; beta <= cap; ++beta) {
        BinaryPoly target = BinaryPoly::from_exponents({0}) ^
                            BinaryPoly::from_exponents({static_cast<unsigned>(beta)});
        if (parity31::divides(p, target)) return beta;
    }
    return 0;
}

// Trial division by every polynomial of degree 1..deg/2.
inline bool is_irreducible(const parity31::BinaryPoly& p) {
    using parity31::BinaryPoly;
    int d = p.degree();
    if (d <= 0) return false;
    for (uint64_t bits = 2; bits < (uint64_t{1} << (d / 2 + 1)); ++bits) {
        std::vector<unsigned> exps;
        for (unsigned i = 0; i < 64; ++i)
            if (bits >> i & 1) exps.push_back(i);
        BinaryPoly cand = BinaryPoly::from_exponents(exps);
        if (cand.degree() < 1) continue;
        if (parity31::divides(cand, p)) return false;
    }
    return true;
}

// T(m, j) as the literal Mobius sum over divisors of the radical.
inline int64_t mobius_class_sum(uint64_t m, int j) {
    const auto& tab = parity31::orbits();
    std::vector<int> classes;
    for (const auto& [p, e] : parity31::factorize(m)) {
        (void)e;
        classes.push_back(tab.ell(p));
    }
    int64_t sum = 0;
    for (uint32_t subset = 0; subset < (1u << classes.size()); ++subset) {
        int ell_d = 0, bits = 0;
        for (size_t i = 0; i < classes.size(); ++i)
            if (subset >> i & 1) {
                ell_d += classes[i];
                ++bits;
            }
        if (ell_d % 6 == j) sum += bits % 2 ? -1 : 1;
    }
    return sum;
}

// Exact 6x6 integer determinant by cofactor expansion.
inline int64_t det6(const std::array<std::array<int64_t, 6>, 6>& m) {
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    int64_t det = 0;
    // iterate permutations with parity tracking
    std::array<int, 6> c{0, 0, 0, 0, 0, 0};
    int sign = 1;
    auto term = [&]() {
        int64_t t = sign;
        for (int i = 0; i < 6; ++i) t *= m[i][static_cast<size_t>(perm[i])];
        det += t;
    };
    term();
    int i = 0;
    while (i < 6) {
        if (c[i] < i) {
            std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
            sign = -sign;
            term();
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return det;
}

}  // namespace testing_oracles
