#include <stdexcept>
#include "doctest.h"
#include "parity31/membership.hpp"
#include "parity31/oracle.hpp"
#include "parity31/sigma_constants.hpp"

using namespace parity31;

namespace {

const OracleSet& shared_oracle() {
    static const OracleSet set(20000);
    return set;
}

}  // namespace

TEST_CASE("power-of-two members below 2^10") {
    const OracleSet& set = shared_oracle();
    std::vector<int> got;
    for (int k = 0; (uint64_t{1} << k) <= 1024; ++k)
        if (set.member(uint64_t{1} << k)) got.push_back(k);
    CHECK(got == std::vector<int>{0, 1, 2, 3, 4, 7, 10});
    CHECK(set.member(2048));   // bit 11 continues the pattern
    CHECK(!set.member(4096));  // bit 12 does not
}

TEST_CASE("partition parities reproduce the defining polynomial") {
    const OracleSet& set = shared_oracle();
    CHECK(!set.partition_parity(2));
    CHECK(set.partition_parity(5));
    CHECK(set.partition_parity(1));
    for (uint64_t n = 6; n <= set.limit(); n += 97)
        CHECK(!set.partition_parity(n));  // even for all n >= 6
}

TEST_CASE("no member is a multiple of 31^2") {
    const OracleSet& set = shared_oracle();
    for (uint64_t n = 961; n <= set.limit(); n += 961) CHECK(!set.member(n));
}

TEST_CASE("divisor sums") {
    const OracleSet& set = shared_oracle();
    CHECK(set.sigma(1) == 1);
    for (uint64_t u = 1; 31 * u <= set.limit(); u += 7)
        CHECK(set.sigma(31 * u) % 2 == 1);
    CHECK_THROWS_AS(set.sigma(set.limit() + 1), std::out_of_range);
}

TEST_CASE("divisor sums are periodic mod 31 at low 2-power levels") {
    const OracleSet& set = shared_oracle();
    for (int k = 0; k <= 2; ++k) {
        uint64_t mod = uint64_t{1} << (k + 1);
        for (uint64_t n1 = 1; n1 <= 300; ++n1) {
            uint64_t n2 = n1 + 31;
            if ((n2 << k) > set.limit()) break;
            CHECK(set.sigma(n1 << k) % mod == set.sigma(n2 << k) % mod);
        }
    }
}

TEST_CASE("oracle divisor sums reproduce the u table") {
    const OracleSet& set = shared_oracle();
    SigmaEngine engine(16);
    uint64_t p3 = 1;
    for (int j = 0; j < 6; ++j) {
        for (int k = 0; (p3 << k) <= set.limit() && k <= 12; ++k) {
            uint64_t mod = uint64_t{1} << (k + 1);
            CHECK(set.sigma(p3 << k) % mod == engine.sigma(p3, k));
        }
        p3 *= 3;
    }
}

TEST_CASE("membership bits assemble the series of m") {
    // sum_i 2^i [2^i m in set] is the series of m truncated mod 2^{k+1};
    // at m = 1 these bits are also the u-table column j = 0.
    const OracleSet& set = shared_oracle();
    const Membership mem;
    SigmaEngine engine(16);
    for (uint64_t m : {1ull, 3ull, 5ull, 9ull, 15ull, 33ull, 105ull}) {
        int k = 0;
        uint64_t bits = 0;
        while ((m << (k + 1)) <= set.limit() && k < 14) {
            if (set.member(m << k)) bits |= uint64_t{1} << k;
            ++k;
        }
        TwoAdic expect = m == 1 ? mem.s1(k) : (mem.ms(m) * TwoAdic(m, 63).inv()).reduced(k);
        CHECK(bits == expect.residue());
        if (m == 1) CHECK(bits == (engine.sigma(1, k - 1) & ((uint64_t{1} << k) - 1)));
    }
}

TEST_CASE("oracle agrees with the series membership") {
    const OracleSet& set = shared_oracle();
    const Membership mem;
    for (uint64_t n = 1; n <= set.limit(); ++n)
        CHECK(set.member(n) == mem.member(n).member);
}

TEST_CASE("oracle agrees with the series of 31") {
    const OracleSet& set = shared_oracle();
    const Membership mem;
    TwoAdic s31 = mem.s31(12);
    for (int k = 0; (31ull << k) <= set.limit(); ++k)
        CHECK(set.member(31ull << k) == s31.bit(k));
}

TEST_CASE("count prefix") {
    const OracleSet& set = shared_oracle();
    uint64_t manual = 0;
    for (uint64_t n = 1; n <= 1000; ++n) manual += set.member(n);
    CHECK(set.count_leq(1000) == manual);
    CHECK(set.count_leq(0) == 0);
}
