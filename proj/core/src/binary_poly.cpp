#include "parity31/binary_poly.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace parity31 {

namespace {
constexpr unsigned word_bits = 64;
}

void BinaryPoly::set(unsigned d) {
    unsigned w = d / word_bits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= uint64_t{1} << (d % word_bits);
}

void BinaryPoly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPoly BinaryPoly::from_exponents(std::initializer_list<unsigned> exps) {
    BinaryPoly p;
    for (unsigned e : exps) p.set(e);
    return p;
}

BinaryPoly BinaryPoly::from_exponents(const std::vector<unsigned>& exps) {
    BinaryPoly p;
    for (unsigned e : exps) p.set(e);
    return p;
}

BinaryPoly BinaryPoly::parse(std::string_view text) {
    BinaryPoly p;
    size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        if (i == text.size()) break;
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{} || value > 1u << 20)
            throw std::invalid_argument("BinaryPoly::parse: bad exponent list '" + std::string(text) + "'");
        p.set(value);
        any = true;
        i = static_cast<size_t>(ptr - text.data());
    }
    if (!any)
        throw std::invalid_argument("BinaryPoly::parse: empty exponent list");
    return p;
}

int BinaryPoly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size() * word_bits - std::countl_zero(words_.back()) - 1);
}

bool BinaryPoly::coeff(unsigned d) const {
    unsigned w = d / word_bits;
    if (w >= words_.size()) return false;
    return ((words_[w] >> (d % word_bits)) & 1) != 0;
}

BinaryPoly BinaryPoly::shifted_up(unsigned e) const {
    if (is_zero() || e == 0) return *this;
    BinaryPoly r;
    unsigned wshift = e / word_bits, bshift = e % word_bits;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] |= bshift ? words_[i] << bshift : words_[i];
        if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (word_bits - bshift);
    }
    r.trim();
    return r;
}

BinaryPoly operator^(const BinaryPoly& a, const BinaryPoly& b) {
    BinaryPoly r = a;
    if (b.words_.size() > r.words_.size()) r.words_.resize(b.words_.size(), 0);
    for (size_t i = 0; i < b.words_.size(); ++i) r.words_[i] ^= b.words_[i];
    r.trim();
    return r;
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
    BinaryPoly acc;
    if (a.is_zero() || b.is_zero()) return acc;
    int da = a.degree();
    for (int d = 0; d <= da; ++d)
        if (a.coeff(static_cast<unsigned>(d)))
            acc = acc ^ b.shifted_up(static_cast<unsigned>(d));
    return acc;
}

std::pair<BinaryPoly, BinaryPoly> divrem(const BinaryPoly& num, const BinaryPoly& den) {
    if (den.is_zero())
        throw std::domain_error("BinaryPoly divrem: division by zero polynomial");
    BinaryPoly q, r = num;
    int dd = den.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        unsigned shift = static_cast<unsigned>(r.degree() - dd);
        q.set(shift);
        r = r ^ den.shifted_up(shift);
    }
    q.trim();
    return {q, r};
}

BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b) {
    return divrem(a, b).second;
}

bool divides(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.is_zero())
        throw std::domain_error("divides: zero divisor");
    return (b % a).is_zero();
}

BinaryPoly gcd(BinaryPoly a, BinaryPoly b) {
    while (!b.is_zero()) {
        BinaryPoly r = a % b;
        a = b;
        b = r;
    }
    return a;
}

uint64_t order(const BinaryPoly& p) {
    if (p.is_zero() || !p.coeff(0))
        throw std::domain_error("order: requires constant term 1");
    if (p.degree() == 0) return 1;

    constexpr uint64_t cap = uint64_t{1} << 20;
    const BinaryPoly z = BinaryPoly::from_exponents({1});
    const BinaryPoly z2 = BinaryPoly::from_exponents({2});
    const BinaryPoly unit = BinaryPoly::one();

    BinaryPoly r = z % p;  // z^beta mod p, beta = 1, 3, 5, ...
    for (uint64_t beta = 1; beta < cap; beta += 2) {
        if (r == unit) return beta;
        r = (r * z2) % p;
    }
    throw std::overflow_error("order: no odd order below 2^20");
}

std::string BinaryPoly::to_exponent_string() const {
    if (is_zero()) return "";
    std::string s;
    for (int d = 0; d <= degree(); ++d) {
        if (!coeff(static_cast<unsigned>(d))) continue;
        if (!s.empty()) s += ',';
        s += std::to_string(d);
    }
    return s;
}

const BinaryPoly& defining_poly() { return degree31_factor(1); }

const BinaryPoly& degree31_factor(int i) {
    static const BinaryPoly factors[6] = {
        BinaryPoly::from_exponents({0, 1, 3, 4, 5}),
        BinaryPoly::from_exponents({0, 1, 2, 4, 5}),
        BinaryPoly::from_exponents({0, 2, 3, 4, 5}),
        BinaryPoly::from_exponents({0, 1, 2, 3, 5}),
        BinaryPoly::from_exponents({0, 2, 5}),
        BinaryPoly::from_exponents({0, 3, 5}),
    };
    if (i < 1 || i > 6)
        throw std::out_of_range("degree31_factor: index must be 1..6");
    return factors[i - 1];
}

}  // namespace parity31
