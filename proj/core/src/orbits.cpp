#include "parity31/orbits.hpp"

#include <bit>
#include <stdexcept>

namespace parity31 {

OrbitTable::OrbitTable() {
    idx_.fill(-1);
    uint32_t p3 = 1;
    for (int j = 0; j < 6; ++j) {
        uint32_t r = p3;
        for (int k = 0; k < 5; ++k) {
            if (idx_[r] != -1)
                throw std::logic_error("OrbitTable: orbits overlap");
            idx_[r] = static_cast<int8_t>(j);
            r = r * 2 % 31;
        }
        p3 = p3 * 3 % 31;
    }
}

int OrbitTable::ell_residue(uint32_t r) const {
    if (r == 0 || r >= 31 || idx_[r] < 0)
        throw std::domain_error("OrbitTable: ell undefined on multiples of 31");
    return idx_[r];
}

int OrbitTable::ell(uint64_t n) const {
    if (n == 0)
        throw std::domain_error("OrbitTable::ell: n must be positive");
    return ell_residue(static_cast<uint32_t>(n % 31));
}

const OrbitTable& orbits() {
    static const OrbitTable table;
    return table;
}

Decomposition decompose(uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("decompose: n must be positive");
    Decomposition d{0, 0, n};
    d.k = std::countr_zero(n);
    d.m = n >> d.k;
    while (d.m % 31 == 0) {
        d.m /= 31;
        ++d.tau;
    }
    return d;
}

}  // namespace parity31
