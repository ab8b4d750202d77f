#include "parity31/lifted_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace parity31 {

LiftedPoly::LiftedPoly(int bits) : bits_(bits) {
    if (bits < 1 || bits > 64)
        throw std::invalid_argument("LiftedPoly: bits must be in [1, 64]");
}

LiftedPoly::LiftedPoly(std::vector<int64_t> coeffs, int bits) : LiftedPoly(bits) {
    c_.reserve(coeffs.size());
    for (int64_t v : coeffs) c_.push_back(static_cast<uint64_t>(v) & mask());
    trim();
}

uint64_t LiftedPoly::mask() const {
    return bits_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << bits_) - 1);
}

void LiftedPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int LiftedPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

LiftedPoly operator*(const LiftedPoly& a, const LiftedPoly& b) {
    if (a.bits_ != b.bits_)
        throw std::invalid_argument("LiftedPoly: mixed moduli");
    LiftedPoly r(a.bits_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    for (auto& v : r.c_) v &= r.mask();
    r.trim();
    return r;
}

LiftedPoly operator+(const LiftedPoly& a, const LiftedPoly& b) {
    if (a.bits_ != b.bits_)
        throw std::invalid_argument("LiftedPoly: mixed moduli");
    LiftedPoly r(a.bits_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = (a.coeff(i) + b.coeff(i)) & r.mask();
    r.trim();
    return r;
}

bool operator==(const LiftedPoly& a, const LiftedPoly& b) {
    return a.bits_ == b.bits_ && a.c_ == b.c_;
}

LiftedPoly LiftedPoly::derivative() const {
    LiftedPoly r(bits_);
    if (c_.size() < 2) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = (c_[i] * i) & mask();
    r.trim();
    return r;
}

LiftedPoly lift(const BinaryPoly& p, int bits) {
    LiftedPoly r(bits);
    for (int d = 0; d <= p.degree(); ++d)
        r.c_.push_back(p.coeff(static_cast<unsigned>(d)) ? 1 : 0);
    return r;
}

LiftedPoly graeffe(const LiftedPoly& f) {
    LiftedPoly g(f.bits_);
    if (f.c_.empty()) return g;
    const uint64_t m = f.mask();
    // h = f(z) f(-z); odd-degree coefficients of h cancel identically.
    std::vector<uint64_t> h(2 * f.c_.size() - 1, 0);
    for (size_t i = 0; i < f.c_.size(); ++i)
        for (size_t j = 0; j < f.c_.size(); ++j) {
            uint64_t t = f.c_[i] * f.c_[j];
            h[i + j] += (j & 1) ? (~t + 1) : t;
        }
    g.c_.resize(f.c_.size());
    for (size_t i = 0; i < h.size(); ++i) {
        if (i & 1) {
            if ((h[i] & m) != 0)
                throw std::logic_error("graeffe: odd coefficient survived");
        } else {
            g.c_[i / 2] = h[i] & m;
        }
    }
    g.trim();
    return g;
}

}  // namespace parity31
