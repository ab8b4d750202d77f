#include <stdexcept>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "parity31/census.hpp"
#include "parity31/oracle.hpp"
#include "parity31/orbits.hpp"
#include "parity31/primes.hpp"

using namespace parity31;

namespace {

std::string fmt(double v, int digits) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Brute-force count of the auxiliary set by factorizing every odd m.
uint64_t census_g_naive(uint64_t x) {
    const OrbitTable& tab = orbits();
    uint64_t count = 0;
    for (uint64_t m = 1; m <= x; m += 2) {
        if (m % 31 == 0) continue;
        int w3 = 0;
        bool class0 = false;
        for (const auto& [p, e] : factorize(m)) {
            (void)e;
            int c = tab.ell(p);
            if (c == 0) class0 = true;
            if (c == 3) ++w3;
        }
        if (class0) continue;
        if ((m << w3) <= x) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("census rows at 10^3 and 10^4") {
    Membership mem;
    CensusConfig cfg;
    cfg.x_max = 10000;
    cfg.checkpoints = {1000, 10000};
    cfg.threads = 2;
    auto rows = run_census(cfg, mem);
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].x == 1000);
    CHECK(rows[0].a == 480);
    CHECK(rows[0].a1 == 20);
    CHECK(rows[0].a2 == 44);
    CHECK(rows[0].a3 == 233);
    CHECK(rows[0].a4 == 183);
    CHECK(fmt(rows[0].c, 4) == "0.7782");
    CHECK(fmt(rows[0].c1, 3) == "0.032");

    CHECK(rows[1].a == 4543);
    CHECK(rows[1].a1 == 361);
    CHECK(rows[1].a2 == 532);
    CHECK(rows[1].a3 == 2294);
    CHECK(rows[1].a4 == 1356);
    CHECK(fmt(rows[1].c, 4) == "0.7914");
    CHECK(fmt(rows[1].c1, 3) == "0.063");

    for (const auto& r : rows) CHECK(r.a == r.a1 + r.a2 + r.a3 + r.a4);
    CHECK(rows[0].a <= rows[1].a);
    CHECK(rows[0].a3 <= rows[1].a3);
}

TEST_CASE("census count equals the oracle count") {
    Membership mem;
    OracleSet oracle(10000);
    CensusConfig cfg;
    cfg.x_max = 10000;
    cfg.checkpoints = {100, 1000, 5000, 10000};
    auto rows = run_census(cfg, mem);
    CensusRow prev;
    for (const auto& r : rows) {
        CHECK(r.a == oracle.count_leq(r.x));
        // prefix counts never decrease
        CHECK(r.a >= prev.a);
        CHECK(r.a1 >= prev.a1);
        CHECK(r.a2 >= prev.a2);
        CHECK(r.a3 >= prev.a3);
        CHECK(r.a4 >= prev.a4);
        prev = r;
    }
}

TEST_CASE("census is deterministic across thread counts") {
    Membership mem;
    CensusConfig one;
    one.x_max = 30000;
    one.checkpoints = {12345, 30000};
    one.threads = 1;
    one.block_bits = 12;  // force many blocks
    CensusConfig four = one;
    four.threads = 4;
    auto a = run_census(one, mem), b = run_census(four, mem);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].a == b[i].a);
        CHECK(a[i].a1 == b[i].a1);
        CHECK(a[i].a4 == b[i].a4);
    }
}

TEST_CASE("census input validation") {
    Membership mem;
    CensusConfig cfg;
    cfg.x_max = 0;
    CHECK_THROWS_AS(run_census(cfg, mem), std::invalid_argument);
    cfg.x_max = 100;
    cfg.checkpoints = {50, 50};
    CHECK_THROWS_AS(run_census(cfg, mem), std::invalid_argument);
    cfg.checkpoints = {200};
    CHECK_THROWS_AS(run_census(cfg, mem), std::invalid_argument);
}

TEST_CASE("auxiliary set counts") {
    // 1, 3, 5, 7, 9 qualify below 10 (m = 1 counts by convention)
    CHECK(census_g(10) == 5);
    CHECK(census_g(0) == 0);
    for (uint64_t x : {100ull, 1000ull, 20000ull})
        CHECK(census_g(x) == census_g_naive(x));
}

TEST_CASE("auxiliary set counts match the frozen golden values") {
    std::ifstream in(std::string(PARITY31_GOLDEN_DIR) + "/census_g.txt");
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        unsigned long long x = 0, expect = 0;
        REQUIRE(std::sscanf(line.c_str(), "%llu %llu", &x, &expect) == 2);
        if (x > 100000) continue;  // larger rows are covered by the CLI-level runs
        CHECK(census_g(x) == expect);
        // the normalized ratio stays near 0.62 at this scale
        if (x >= 10000) {
            double ratio = static_cast<double>(expect) *
                           std::pow(std::log(static_cast<double>(x)), 0.25) /
                           static_cast<double>(x);
            CHECK(ratio > 0.58);
            CHECK(ratio < 0.66);
        }
        ++rows;
    }
    CHECK(rows >= 4);
}
