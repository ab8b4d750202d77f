#include <stdexcept>
#include <random>

#include "doctest.h"
#include "parity31/orbits.hpp"
#include "parity31/primes.hpp"
#include "parity31/profile.hpp"

using namespace parity31;

TEST_CASE("orbit table partitions the units into six classes of five") {
    const OrbitTable& tab = orbits();
    int count[6] = {0, 0, 0, 0, 0, 0};
    for (uint32_t r = 1; r < 31; ++r) count[tab.ell_residue(r)] += 1;
    for (int j = 0; j < 6; ++j) CHECK(count[j] == 5);
    CHECK(tab.ell_residue(1) == 0);
    CHECK(tab.ell_residue(3) == 1);
    CHECK_THROWS_AS(tab.ell_residue(0), std::domain_error);
}

TEST_CASE("ell on small numbers") {
    const OrbitTable& tab = orbits();
    CHECK(tab.ell(3) == 1);
    CHECK(tab.ell(2) == 0);
    CHECK(tab.ell(5) == 2);
    CHECK(tab.ell(7) == 4);
    CHECK(tab.ell(11) == 5);
    CHECK_THROWS_AS(tab.ell(31), std::domain_error);
    CHECK_THROWS_AS(tab.ell(62), std::domain_error);
}

TEST_CASE("ell is completely additive") {
    const OrbitTable& tab = orbits();
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 500; ++iter) {
        uint64_t a = 1 + rng() % 100000, b = 1 + rng() % 100000;
        if (a % 31 == 0 || b % 31 == 0) continue;
        CHECK(tab.ell(a * b) == (tab.ell(a) + tab.ell(b)) % 6);
    }
}

TEST_CASE("decompose") {
    auto d = decompose(124);
    CHECK(d.k == 2);
    CHECK(d.tau == 1);
    CHECK(d.m == 1);

    d = decompose(961);
    CHECK(d.k == 0);
    CHECK(d.tau == 2);
    CHECK(d.m == 1);

    d = decompose(96);
    CHECK(d.k == 5);
    CHECK(d.tau == 0);
    CHECK(d.m == 3);

    CHECK_THROWS_AS(decompose(0), std::invalid_argument);
}

TEST_CASE("primes and factorization") {
    auto ps = primes_up_to(30);
    CHECK(ps == std::vector<uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});

    FactorSieve sieve(1000);
    CHECK(sieve.spf(91) == 7);
    CHECK(sieve.spf(97) == 97);
    auto f = sieve.factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<uint64_t, int>{2, 3});
    CHECK(f[1] == std::pair<uint64_t, int>{3, 2});
    CHECK(f[2] == std::pair<uint64_t, int>{5, 1});

    auto g = factorize(uint64_t{1000003} * 1000033);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(g[1].first == 1000033);
    CHECK(factorize(1).empty());
}

TEST_CASE("profile of prime powers") {
    OddProfile p9 = profile(9);
    CHECK(p9.omega[1] == 1);
    CHECK(p9.omega_total == 1);
    CHECK(p9.ell == 2);
    CHECK(p9.alpha_prime == 6);
    CHECK(p9.a_prime == 3);
    // gap between ceil(1/2) and ceil(0/2); the same class data as m = 3
    CHECK(p9.t == 1);

    OddProfile p3 = profile(3);
    CHECK(p3.omega[1] == 1);
    CHECK(p3.ell == 1);
    CHECK(p3.alpha_prime == 8);
    CHECK(p3.a_prime == 7);
    CHECK(p3.t == 1);
}

TEST_CASE("profile counts distinct primes per class") {
    // 23 and 29 both lie in class 3
    OddProfile p = profile(23 * 29);
    CHECK(p.omega[3] == 2);
    CHECK(p.omega_total == 2);

    OddProfile p2 = profile(23 * 23);
    CHECK(p2.omega[3] == 1);
    CHECK(p2.ell == (orbits().ell(23) * 2) % 6);
}

TEST_CASE("profile domain errors") {
    CHECK_THROWS_AS(profile(1), std::domain_error);
    CHECK_THROWS_AS(profile(6), std::domain_error);
    CHECK_THROWS_AS(profile(93), std::domain_error);
}

TEST_CASE("alpha_prime parity equals the class-2 plus class-4 count") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 500; ++iter) {
        uint64_t m = 3 + 2 * (rng() % 50000);
        if (m % 31 == 0) continue;
        OddProfile p = profile(m);
        CHECK(p.alpha_prime % 2 == p.w24() % 2);
    }
}

TEST_CASE("exponent gap: both defining forms agree on all shapes") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            int diff = (a + b + 1) / 2 - (b + 1) / 2;
            int branched = (a % 2 == 1 && b % 2 == 1) ? (a - 1) / 2 : (a + 1) / 2;
            CHECK(diff == branched);
        }
}
