#include "parity31/census.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "parity31/orbits.hpp"
#include "parity31/primes.hpp"

namespace parity31 {

namespace {

struct Counts {
    uint64_t a = 0, a1 = 0, a2 = 0, a3 = 0, a4 = 0;

    Counts& operator+=(const Counts& o) {
        a += o.a;
        a1 += o.a1;
        a2 += o.a2;
        a3 += o.a3;
        a4 += o.a4;
        return *this;
    }
};

struct BlockResult {
    std::vector<std::pair<uint64_t, Counts>> at_checkpoints;
    Counts total;
};

int mod12(int x) { return ((x % 12) + 12) % 12; }

// Per-class contributions to the alpha and a accumulators.
constexpr int d_alpha[6] = {0, -2, -1, 0, 1, 2};
constexpr int d_a[6] = {0, -1, 1, 0, -1, 1};

struct ClassTallies {
    std::vector<uint32_t> res;
    std::vector<uint8_t> tau;
    std::vector<uint8_t> w3, w24, w15;
    std::vector<int8_t> alpha, av;
    std::vector<uint8_t> class0;

    void reset(size_t len) {
        res.assign(len, 0);
        tau.assign(len, 0);
        w3.assign(len, 0);
        w24.assign(len, 0);
        w15.assign(len, 0);
        alpha.assign(len, 0);
        av.assign(len, 0);
        class0.assign(len, 0);
    }

    void tally(size_t idx, int c) {
        if (c == 0) class0[idx] = 1;
        if (c == 3) w3[idx] += 1;
        if (c == 2 || c == 4) w24[idx] += 1;
        if (c == 1 || c == 5) w15[idx] += 1;
        alpha[idx] = static_cast<int8_t>(alpha[idx] + d_alpha[c]);
        av[idx] = static_cast<int8_t>(av[idx] + d_a[c]);
    }
};

// Sieve the class counts of the odd 31-free part of every n in [lo, hi).
void sieve_block(uint64_t lo, uint64_t hi, const std::vector<uint32_t>& primes,
                 const OrbitTable& tab, ClassTallies& t) {
    size_t len = static_cast<size_t>(hi - lo);
    t.reset(len);
    for (uint64_t n = lo; n < hi; ++n)
        t.res[static_cast<size_t>(n - lo)] =
            static_cast<uint32_t>(n >> std::countr_zero(n));

    for (uint64_t j = (lo + 30) / 31 * 31; j < hi; j += 31) {
        size_t idx = static_cast<size_t>(j - lo);
        while (t.res[idx] % 31 == 0) {
            t.res[idx] /= 31;
            t.tau[idx] += 1;
        }
    }

    for (uint32_t p : primes) {
        if (p == 2 || p == 31) continue;
        if (uint64_t{p} * p >= hi) break;
        int c = tab.ell_residue(p % 31);
        for (uint64_t j = (lo + p - 1) / p * p; j < hi; j += p) {
            size_t idx = static_cast<size_t>(j - lo);
            while (t.res[idx] % p == 0) t.res[idx] /= p;
            t.tally(idx, c);
        }
    }

    for (size_t idx = 0; idx < len; ++idx)
        if (t.res[idx] > 1)  // leftover prime above the sieving bound
            t.tally(idx, tab.ell_residue(t.res[idx] % 31));
}

}  // namespace

std::vector<CensusRow> run_census(const CensusConfig& cfg, const Membership& membership) {
    if (cfg.x_max == 0)
        throw std::invalid_argument("run_census: x_max must be positive");
    if (cfg.x_max >> 32)
        throw std::invalid_argument("run_census: x_max above 2^32 is not supported");
    for (size_t i = 0; i < cfg.checkpoints.size(); ++i) {
        if (cfg.checkpoints[i] > cfg.x_max ||
            (i > 0 && cfg.checkpoints[i] <= cfg.checkpoints[i - 1]))
            throw std::invalid_argument("run_census: checkpoints must ascend and stay <= x_max");
    }

    const OrbitTable& tab = orbits();
    const auto primes = primes_up_to(static_cast<uint32_t>(std::sqrt(static_cast<double>(cfg.x_max))) + 2);
    const int wp = membership.work_prec();
    const TwoAdic s1 = membership.s1(wp), s31 = membership.s31(wp);
    const TwoAdic inv31 = TwoAdic(31, wp).inv();

    const uint64_t block = uint64_t{1} << cfg.block_bits;
    const uint64_t nblocks = (cfg.x_max + block - 1) / block;
    std::vector<BlockResult> results(static_cast<size_t>(nblocks));

    auto process = [&](uint64_t b) {
        uint64_t lo = b * block + 1, hi = std::min(cfg.x_max + 1, (b + 1) * block + 1);
        ClassTallies t;
        sieve_block(lo, hi, primes, tab, t);

        BlockResult out;
        size_t cp = 0;
        while (cp < cfg.checkpoints.size() && cfg.checkpoints[cp] < lo) ++cp;

        Counts counts;
        for (uint64_t n = lo; n < hi; ++n) {
            size_t idx = static_cast<size_t>(n - lo);
            int k = std::countr_zero(n);
            int tau = t.tau[idx];
            bool is_member = false;
            int w3 = t.w3[idx], w24 = t.w24[idx];
            if (tau < 2) {
                uint64_t m = n >> k;
                for (int e = 0; e < tau; ++e) m /= 31;
                if (m == 1) {
                    is_member = (tau ? s31 : s1).bit(k);
                } else if (!t.class0[idx]) {
                    int ell = tab.ell_residue(static_cast<uint32_t>(m % 31));
                    SeriesInput in{w3,
                                   w24,
                                   t.w15[idx],
                                   w3 + w24 + t.w15[idx],
                                   mod12(t.alpha[idx] - 2 * ell),
                                   mod12(t.av[idx] - 4 * ell),
                                   ell,
                                   false};
                    TwoAdic s = membership.ms(in) * TwoAdic(m, wp).inv();
                    if (tau == 1) s = -(s * inv31);
                    is_member = s.bit(k);
                }
            }
            if (is_member) {
                counts.a += 1;
                if (w3 != 0)
                    (w24 != 0 ? counts.a1 : counts.a2) += 1;
                else
                    (w24 != 0 ? counts.a3 : counts.a4) += 1;
            }
            if (cp < cfg.checkpoints.size() && n == cfg.checkpoints[cp]) {
                out.at_checkpoints.emplace_back(n, counts);
                ++cp;
            }
        }
        out.total = counts;
        return out;
    };

    unsigned nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = static_cast<unsigned>(std::min<uint64_t>(nthreads, nblocks));

    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i)
        pool.emplace_back([&] {
            for (;;) {
                uint64_t b = next.fetch_add(1);
                if (b >= nblocks) break;
                results[static_cast<size_t>(b)] = process(b);
            }
        });
    for (auto& th : pool) th.join();

    // Ordered reduction: rows are exact prefix counts at each checkpoint.
    std::vector<CensusRow> rows;
    rows.reserve(cfg.checkpoints.size());
    Counts running;
    for (const auto& res : results) {
        for (const auto& [x, partial] : res.at_checkpoints) {
            Counts at = running;
            at += partial;
            double scale = std::pow(std::log(static_cast<double>(x)), 0.25) /
                           static_cast<double>(x);
            rows.push_back(CensusRow{x, at.a, at.a1, at.a2, at.a3, at.a4,
                                     static_cast<double>(at.a) * scale,
                                     static_cast<double>(at.a1) * scale});
        }
        running += res.total;
    }
    return rows;
}

uint64_t census_g(uint64_t x_max, unsigned threads) {
    if (x_max == 0) return 0;
    if (x_max >> 32)
        throw std::invalid_argument("census_g: x_max above 2^32 is not supported");

    const OrbitTable& tab = orbits();
    const auto primes = primes_up_to(static_cast<uint32_t>(std::sqrt(static_cast<double>(x_max))) + 2);

    const uint64_t block = uint64_t{1} << 22;
    const uint64_t nblocks = (x_max + block - 1) / block;
    std::vector<uint64_t> partial(static_cast<size_t>(nblocks), 0);

    auto process = [&](uint64_t b) {
        uint64_t lo = b * block + 1, hi = std::min(x_max + 1, (b + 1) * block + 1);
        size_t len = static_cast<size_t>(hi - lo);
        std::vector<uint32_t> res(len, 0);
        std::vector<uint8_t> w3(len, 0), skip(len, 0);

        for (uint64_t m = lo | 1; m < hi; m += 2)
            res[static_cast<size_t>(m - lo)] = static_cast<uint32_t>(m);
        for (uint64_t j = (lo + 30) / 31 * 31; j < hi; j += 31) {
            if (j % 2 == 0) continue;
            skip[static_cast<size_t>(j - lo)] = 1;  // not coprime to 31
        }
        for (uint32_t p : primes) {
            if (p == 2 || p == 31) continue;
            if (uint64_t{p} * p >= hi) break;
            int c = tab.ell_residue(p % 31);
            uint64_t start = (lo + p - 1) / p * p;
            if (start % 2 == 0) start += p;  // odd multiples only
            for (uint64_t j = start; j < hi; j += 2 * p) {
                size_t idx = static_cast<size_t>(j - lo);
                while (res[idx] % p == 0) res[idx] /= p;
                if (c == 0) skip[idx] = 1;
                if (c == 3) w3[idx] += 1;
            }
        }

        uint64_t count = 0;
        for (uint64_t m = lo | 1; m < hi; m += 2) {
            size_t idx = static_cast<size_t>(m - lo);
            if (skip[idx]) continue;
            uint32_t r = res[idx];  // 1 or a single prime above the bound
            if (r > 1) {
                int c = tab.ell_residue(r % 31);
                if (c == 0) continue;
                if (c == 3) w3[idx] += 1;
            }
            if ((m << w3[idx]) <= x_max) ++count;
        }
        return count;
    };

    unsigned nthreads = threads ? threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = static_cast<unsigned>(std::min<uint64_t>(nthreads, nblocks));

    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i)
        pool.emplace_back([&] {
            for (;;) {
                uint64_t b = next.fetch_add(1);
                if (b >= nblocks) break;
                partial[static_cast<size_t>(b)] = process(b);
            }
        });
    for (auto& th : pool) th.join();

    uint64_t total = 0;
    for (uint64_t c : partial) total += c;
    return total;
}

}  // namespace parity31
