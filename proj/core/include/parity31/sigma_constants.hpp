#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "parity31/lifted_poly.hpp"
#include "parity31/two_adic.hpp"

namespace parity31 {

/// Computes sigma(A, 2^k n) mod 2^{k+1} for the partition set A of
/// defining_poly(), by Graeffe-iterating integer lifts of P and of its
/// cofactor W = (1 - z) P2 ... P6 (so that P W = 1 - z^31 mod 2, and the
/// k-th iterates still multiply to 1 - z^31 mod 2^{k+1}).
///
/// All iterates are carried at a single working modulus 2^bits; the mod
/// 2^{k+1} guarantee only improves with extra working bits. Construction is
/// sequential, a finished engine is read-only apart from lazy row caching.
class SigmaEngine {
public:
    explicit SigmaEngine(int bits);

    int bits() const { return bits_; }

    /// sigma(A, 2^k n) mod 2^{k+1}. Requires n >= 1 and k + 1 <= bits.
    /// The value depends on n only through n mod 31.
    uint64_t sigma(uint64_t n, int k);

    /// (u_{k,0}, ..., u_{k,5}) = sigma(A, 2^k 3^j) mod 2^{k+1}.
    std::array<uint64_t, 6> u_row(int k);

    /// Residue sums at iteration k: entry r is the sum of the coefficients
    /// q_i of z P'_(k) W_(k) over i congruent to r mod 31, at full working
    /// precision.
    const std::array<uint64_t, 31>& residue_row(int k);

private:
    void advance(int target);

    int bits_;
    int level_ = 0;
    LiftedPoly p_, w_;
    std::vector<std::array<uint64_t, 31>> rows_;
};

/// One-shot sigma(A, 2^k n) mod 2^{k+1}.
uint64_t sigma_mod(uint64_t n, int k);

/// One-shot (u_{k,0..5}).
std::array<uint64_t, 6> u_table(int k);

/// The 2-adic constants U_j, E_i, F_i, G at a common precision.
///
///   U_j = sigma-limit over 2^k 3^j       E_i = sum_j v_{i+2j} U_j
///   F_i = sum_j v_{i+4j} U_j             G   = sum_j (-1)^j U_j
///
/// with the 12-periodic integer weights v. The U_j are the six roots of
/// R(y) = y^6 - y^5 + 3y^4 - 11y^3 + 44y^2 - 36y + 32.
struct ConstantsTable {
    int prec;
    std::array<TwoAdic, 6> U;
    std::array<TwoAdic, 12> E;
    std::array<TwoAdic, 12> F;
    TwoAdic G;

    /// v2(E_i) as an exact integer; requires it to resolve below prec.
    int v2_E(int i) const;

    /// delta(i) = v2(E_i + 2^{v2(E_i)} G); throws when prec <= delta(i).
    int delta(int i) const;
};

ConstantsTable constants_table(int prec);

/// The period-12 weight sequence (2, 1, 1, 0, -1, -1, -2, -1, -1, 0, 1, 1);
/// index is taken mod 12.
int v_weight(int i);

/// R evaluated at a 2-adic point (Horner).
TwoAdic eval_root_poly(const TwoAdic& y);

}  // namespace parity31
