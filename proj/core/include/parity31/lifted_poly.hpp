#pragma once

#include <cstdint>
#include <vector>

#include "parity31/binary_poly.hpp"

namespace parity31 {

/// Polynomial with integer coefficients reduced mod 2^bits, 1 <= bits <= 64.
/// Coefficient i is the i-th entry; trailing zero coefficients are trimmed.
class LiftedPoly {
public:
    explicit LiftedPoly(int bits);
    LiftedPoly(std::vector<int64_t> coeffs, int bits);

    int bits() const { return bits_; }
    int degree() const;
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    size_t size() const { return c_.size(); }

    friend LiftedPoly operator*(const LiftedPoly& a, const LiftedPoly& b);
    friend LiftedPoly operator+(const LiftedPoly& a, const LiftedPoly& b);
    friend bool operator==(const LiftedPoly& a, const LiftedPoly& b);

    LiftedPoly derivative() const;

private:
    uint64_t mask() const;
    void trim();

    std::vector<uint64_t> c_;
    int bits_;

    friend LiftedPoly graeffe(const LiftedPoly& f);
    friend LiftedPoly lift(const BinaryPoly& p, int bits);
};

/// Coefficient-wise injection of {0,1} into Z/2^bits.
LiftedPoly lift(const BinaryPoly& p, int bits);

/// Root-squaring step: returns g with f(z) f(-z) = g(z^2). Multiplicative,
/// fixes 1 - z^q for odd q, and preserves the degree of our inputs.
LiftedPoly graeffe(const LiftedPoly& f);

}  // namespace parity31
