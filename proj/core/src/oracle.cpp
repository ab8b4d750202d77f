#include "parity31/oracle.hpp"

#include <bit>
#include <stdexcept>

#include "parity31/binary_poly.hpp"

namespace parity31 {

namespace {
constexpr unsigned wbits = 64;
}

bool OracleSet::series_bit(uint64_t i) const {
    return (series_[i / wbits] >> (i % wbits)) & 1;
}

// series *= (1 + z^s): f[i] ^= f[i - s] with pre-pass values, done word
// by word from the top so sources stay untouched.
void OracleSet::xor_shifted_self(uint64_t s) {
    uint64_t q = s / wbits, b = s % wbits;
    for (size_t w = series_.size(); w-- > q;) {
        uint64_t low = series_[w - q] << b;
        if (b && w > q) low |= series_[w - q - 1] >> (wbits - b);
        series_[w] ^= low;
    }
}

OracleSet::OracleSet(uint64_t limit) : limit_(limit) {
    if (limit < 1)
        throw std::invalid_argument("OracleSet: limit must be positive");
    size_t words = static_cast<size_t>(limit / wbits) + 1;
    series_.assign(words, 0);
    members_.assign(words, 0);
    series_[0] = 1;  // empty product

    const BinaryPoly& target = defining_poly();
    for (uint64_t n = 1; n <= limit_; ++n) {
        bool want = n <= 5 && target.coeff(static_cast<unsigned>(n));
        if (series_bit(n) != want) {
            members_[n / wbits] |= uint64_t{1} << (n % wbits);
            // 1/(1 - z^n) = product of (1 + z^{n 2^t}) mod 2
            for (uint64_t s = n; s <= limit_; s *= 2) xor_shifted_self(s);
        }
    }
    for (uint64_t n = 1; n <= limit_; ++n) {
        bool want = n <= 5 && target.coeff(static_cast<unsigned>(n));
        if (series_bit(n) != want)
            throw std::logic_error("OracleSet: reconstructed series mismatch");
    }
}

bool OracleSet::member(uint64_t n) const {
    if (n == 0 || n > limit_)
        throw std::out_of_range("OracleSet::member: n outside built range");
    return (members_[n / wbits] >> (n % wbits)) & 1;
}

bool OracleSet::partition_parity(uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("OracleSet::partition_parity: n outside built range");
    return series_bit(n);
}

uint64_t OracleSet::sigma(uint64_t n) const {
    if (n == 0 || n > limit_)
        throw std::out_of_range("OracleSet::sigma: n outside built range");
    uint64_t sum = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        if (member(d)) sum += d;
        uint64_t e = n / d;
        if (e != d && member(e)) sum += e;
    }
    return sum;
}

uint64_t OracleSet::count_leq(uint64_t x) const {
    if (x > limit_) x = limit_;
    uint64_t count = 0;
    uint64_t full = (x + 1) / wbits;
    for (uint64_t w = 0; w < full; ++w) count += std::popcount(members_[w]);
    uint64_t rest = (x + 1) % wbits;
    if (rest) count += std::popcount(members_[full] & ((uint64_t{1} << rest) - 1));
    return count;
}

}  // namespace parity31
