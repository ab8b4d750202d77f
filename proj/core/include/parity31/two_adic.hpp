#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace parity31 {

/// A 2-adic integer known modulo 2^prec, 1 <= prec <= 64.
///
/// Precision is part of the value, not a global setting: arithmetic narrows
/// the result to the weakest operand, and exact halving costs exactly one
/// bit. This makes precision loss visible at every step instead of being an
/// implicit property of the caller.
class TwoAdic {
public:
    static constexpr int max_prec = 64;

    TwoAdic(uint64_t residue, int prec)
        : prec_(checked_prec(prec)), residue_(residue & mask(prec_)) {}

    static TwoAdic from_signed(int64_t v, int prec) {
        return TwoAdic(static_cast<uint64_t>(v), prec);
    }
    static TwoAdic zero(int prec) { return TwoAdic(0, prec); }
    static TwoAdic one(int prec) { return TwoAdic(1, prec); }

    uint64_t residue() const { return residue_; }
    int prec() const { return prec_; }
    bool is_zero() const { return residue_ == 0; }
    bool is_odd() const { return (residue_ & 1) != 0; }

    bool bit(int i) const {
        if (i < 0 || i >= prec_)
            throw std::out_of_range("TwoAdic::bit: index " + std::to_string(i) +
                                    " not below precision " + std::to_string(prec_));
        return ((residue_ >> i) & 1) != 0;
    }

    /// Forget bits: reinterpret the value at a coarser precision.
    TwoAdic reduced(int new_prec) const {
        if (new_prec > prec_)
            throw std::invalid_argument("TwoAdic::reduced: cannot raise precision");
        return TwoAdic(residue_, new_prec);
    }

    friend TwoAdic operator+(const TwoAdic& a, const TwoAdic& b) {
        int p = std::min(a.prec_, b.prec_);
        return TwoAdic(a.residue_ + b.residue_, p);
    }
    friend TwoAdic operator-(const TwoAdic& a, const TwoAdic& b) {
        int p = std::min(a.prec_, b.prec_);
        return TwoAdic(a.residue_ - b.residue_, p);
    }
    friend TwoAdic operator*(const TwoAdic& a, const TwoAdic& b) {
        int p = std::min(a.prec_, b.prec_);
        return TwoAdic(a.residue_ * b.residue_, p);
    }
    TwoAdic operator-() const { return TwoAdic(~residue_ + 1, prec_); }

    /// Multiply by an exactly known (infinite precision) small integer.
    TwoAdic scaled(int64_t s) const {
        return TwoAdic(residue_ * static_cast<uint64_t>(s), prec_);
    }

    /// Newton-Hensel inverse: x <- x(2 - ax) doubles correct bits per step.
    TwoAdic inv() const {
        if (!is_odd())
            throw std::domain_error("TwoAdic::inv: even residue is not invertible");
        uint64_t a = residue_, x = 1;
        for (int bits = 1; bits < prec_; bits *= 2)
            x *= 2 - a * x;
        return TwoAdic(x, prec_);
    }

    /// Index of the lowest set bit, or nullopt when every known bit is zero
    /// (the valuation is then only known to be >= prec).
    std::optional<int> val2() const {
        if (residue_ == 0) return std::nullopt;
        return std::countr_zero(residue_);
    }

    /// Exact division by 2. The quotient is known one bit less precisely.
    TwoAdic halve() const {
        if (is_odd())
            throw std::domain_error("TwoAdic::halve: residue is odd, division is not exact");
        if (prec_ < 2)
            throw std::domain_error("TwoAdic::halve: precision exhausted");
        return TwoAdic(residue_ >> 1, prec_ - 1);
    }

    /// Exact division by 2^e; requires e trailing zero bits.
    TwoAdic shifted_down(int e) const {
        TwoAdic r = *this;
        for (int i = 0; i < e; ++i) r = r.halve();
        return r;
    }

    /// 3^e mod 2^prec; e may be negative since 3 is a 2-adic unit.
    static TwoAdic pow3(int64_t e, int prec) {
        bool neg = e < 0;
        uint64_t k = neg ? static_cast<uint64_t>(-e) : static_cast<uint64_t>(e);
        uint64_t r = 1, b = 3;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        TwoAdic p(r, prec);
        return neg ? p.inv() : p;
    }

    friend bool operator==(const TwoAdic& a, const TwoAdic& b) {
        return a.prec_ == b.prec_ && a.residue_ == b.residue_;
    }

    /// "v" or ">= prec" for display of val2 results.
    std::string val2_string() const {
        auto v = val2();
        return v ? std::to_string(*v) : (">= " + std::to_string(prec_));
    }

private:
    static int checked_prec(int prec) {
        if (prec < 1 || prec > max_prec)
            throw std::invalid_argument("TwoAdic: precision must be in [1, 64]");
        return prec;
    }
    static uint64_t mask(int prec) {
        return prec == 64 ? ~uint64_t{0} : ((uint64_t{1} << prec) - 1);
    }

    int prec_;
    uint64_t residue_;
};

}  // namespace parity31
