#pragma once

#include <array>
#include <cstdint>

namespace parity31 {

/// The multiplicative orbits of (Z/31Z)* under doubling. There are six
/// orbits O(3^j) = {2^k 3^j mod 31 : 0 <= k <= 4}, j = 0..5, of five
/// residues each; multiples of 31 form their own class and carry no index.
/// ell(n) is the orbit index of n mod 31, a completely additive function
/// on integers coprime to 31.
class OrbitTable {
public:
    OrbitTable();

    /// Orbit index for a residue r in [0, 31); r = 0 is an error.
    int ell_residue(uint32_t r) const;

    /// ell(n) for n >= 1 not divisible by 31.
    int ell(uint64_t n) const;

private:
    std::array<int8_t, 31> idx_;
};

/// Shared immutable instance.
const OrbitTable& orbits();

/// n = 2^k 31^tau m with m odd and coprime to 31.
struct Decomposition {
    int k;
    int tau;
    uint64_t m;
};

Decomposition decompose(uint64_t n);

}  // namespace parity31
