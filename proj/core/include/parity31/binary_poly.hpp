#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace parity31 {

/// Polynomial over F2, bit-packed: bit d of the word array is the
/// coefficient of z^d. Value semantics, always trimmed (no zero high words).
class BinaryPoly {
public:
    BinaryPoly() = default;

    static BinaryPoly zero() { return BinaryPoly(); }
    static BinaryPoly one() { return from_exponents({0}); }

    static BinaryPoly from_exponents(std::initializer_list<unsigned> exps);
    static BinaryPoly from_exponents(const std::vector<unsigned>& exps);

    /// Comma separated exponent list, e.g. "0,1,3,4,5". Whitespace allowed.
    static BinaryPoly parse(std::string_view text);

    bool is_zero() const { return words_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const;
    bool coeff(unsigned d) const;

    BinaryPoly shifted_up(unsigned e) const;  // multiply by z^e

    friend BinaryPoly operator^(const BinaryPoly& a, const BinaryPoly& b);
    friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);
    friend bool operator==(const BinaryPoly& a, const BinaryPoly& b) {
        return a.words_ == b.words_;
    }

    std::string to_exponent_string() const;

private:
    void set(unsigned d);
    void trim();

    std::vector<uint64_t> words_;

    friend std::pair<BinaryPoly, BinaryPoly> divrem(const BinaryPoly& num,
                                                    const BinaryPoly& den);
};

std::pair<BinaryPoly, BinaryPoly> divrem(const BinaryPoly& num, const BinaryPoly& den);
BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b);

/// True iff a divides b in F2[z]. a must be nonzero.
bool divides(const BinaryPoly& a, const BinaryPoly& b);

BinaryPoly gcd(BinaryPoly a, BinaryPoly b);

/// Smallest beta >= 1 with p | 1 + z^beta. Requires p(0) = 1. Scans odd
/// beta only (with p(0) = 1 and p squarefree the order is always odd);
/// inputs whose order is even, or exceeds 2^20, raise overflow_error.
uint64_t order(const BinaryPoly& p);

/// 1 + z + z^3 + z^4 + z^5, the polynomial whose partition set this
/// project studies. Its order is 31.
const BinaryPoly& defining_poly();

/// The six irreducible degree-5-or-less factors of (1 + z^31)/(1 + z),
/// indexed 1..6; factor 1 is defining_poly().
const BinaryPoly& degree31_factor(int i);

}  // namespace parity31
