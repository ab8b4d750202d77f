#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "parity31/profile.hpp"
#include "parity31/sigma_constants.hpp"
#include "parity31/two_adic.hpp"

namespace parity31 {

/// Which rule decided a membership query.
enum class Route {
    remark1,             // a class-0 prime factor: never a member
    remark2,             // divisible by 31^2: never a member
    power_of_two,        // n = 2^k, read off the series of 1
    power_of_two_31,     // n = 31 * 2^k, read off the series of 31
    theorem3_case_i,     // k < gamma(m)
    theorem3_case_ii,    // k = gamma(m)
    theorem3_case_iii,   // k > gamma(m)
    theorem0,            // odd-part predicate
};

std::string to_string(Route r);

struct MembershipVerdict {
    bool member = false;
    Route route = Route::remark1;
    int k = 0;                  // 2-exponent of n
    int tau = 0;                // 31-exponent of n
    uint64_t odd_part = 1;      // m in n = 2^k 31^tau m
    std::optional<int> gamma;   // v2 of the series of m, when defined
};

/// Flattened profile data consumed by the series evaluation; the census
/// sieve fills this directly without materializing per-number factor lists.
struct SeriesInput {
    int w3;            // distinct class-3 primes
    int w24;           // distinct class-2 plus class-4 primes
    int w15;           // distinct class-1 plus class-5 primes
    int omega;         // all distinct primes (class 0 excluded by has_class0)
    int alpha_prime;   // in Z/12
    int a_prime;       // in Z/12
    int ell;           // in Z/6
    bool has_class0;
};

SeriesInput series_input(const OddProfile& p);

enum class GammaCase { i, ii, iii, iv };

struct GammaResult {
    int value;
    GammaCase which;
};

/// Decides membership of every n in the partition set of defining_poly()
/// through the 2-adic series S(m) = sum_k 2^k [2^k m in set]: bit k of
/// S(m) answers the query for n = 2^k m, and m S(m) has the closed
/// three-term form in the table constants E, F, G.
///
/// Immutable after construction; safe to share across threads.
class Membership {
public:
    explicit Membership(int prec = TwoAdic::max_prec);

    const ConstantsTable& table() const { return table_; }
    /// Precision of series values: one bit below the table (the closed
    /// form contains a single exact halving).
    int work_prec() const { return table_.prec - 1; }

    /// T(m, j): Mobius sum over divisors d of the radical of m with
    /// ell(d) = j, by the closed form. Requires m odd, m > 1, coprime to
    /// 31. Vanishes identically when m has a class-0 prime factor.
    int64_t mu_class_sum(uint64_t m, int j) const;
    int64_t mu_class_sum(const OddProfile& p, int j) const;

    /// m S(m) at work_prec(). Exact zero when m has a class-0 factor.
    TwoAdic ms(uint64_t m) const;
    TwoAdic ms(const SeriesInput& in) const;

    /// m S(m) by the direct Mobius sum over the radical's divisors,
    /// kept as an independent route for cross checks. Never used by
    /// member().
    TwoAdic ms_divisor_sum(uint64_t m) const;

    /// S(1) and S(31): the series of the powers of two and of 31 times
    /// the powers of two. S(1) = U_0; 31 S(31) = -5 - U_0.
    TwoAdic s1(int prec) const;
    TwoAdic s31(int prec) const;

    /// The closed-form 2-adic valuation of S(m) (four cases by the shape
    /// of the class counts). Requires m odd, > 1, coprime to 31, and free
    /// of class-0 primes.
    GammaResult gamma(uint64_t m) const;
    GammaResult gamma(const OddProfile& p) const;

    /// Membership of arbitrary n >= 1 by direct bit extraction from the
    /// series.
    MembershipVerdict member(uint64_t n) const;

    /// Same verdict derived through the gamma / odd-part / l-congruence
    /// case analysis; exists as a redundant cross-validation path.
    /// Requires the odd part m > 1 free of class-0 primes and tau <= 1.
    MembershipVerdict member_theorem3(uint64_t n) const;

    /// Membership predicate for odd m >= 3 coprime to 31, from the
    /// prime-power and composite conditions on the class counts alone.
    bool odd_member_theorem0(uint64_t m) const;

private:
    TwoAdic series_for(uint64_t m, const OddProfile& p, int tau) const;

    ConstantsTable table_;
    TwoAdic inv31_;
    TwoAdic s1_;
    TwoAdic s31_;
};

}  // namespace parity31
