#include "parity31/euler_constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parity31/orbits.hpp"
#include "parity31/primes.hpp"

namespace parity31 {

namespace {

// Log-space accumulators for the two products.
struct Accumulated {
    double log_h = 0.0;
    double log_c11 = 0.0;
};

// One sieve pass, snapshotted at bound/2 so truncation deltas come free.
std::pair<Accumulated, Accumulated> accumulate(uint64_t prime_bound) {
    if (prime_bound < 2 || prime_bound >> 32)
        throw std::invalid_argument("euler products: prime bound out of range");
    Accumulated acc, at_half;
    bool snapped = false;
    const uint64_t half = prime_bound / 2;
    const OrbitTable& tab = orbits();
    for (uint32_t p : primes_up_to(static_cast<uint32_t>(prime_bound))) {
        if (!snapped && p > half) {
            at_half = acc;
            snapped = true;
        }
        double lp = std::log1p(-1.0 / p);
        if (p == 2 || p == 31) {
            acc.log_c11 += 0.75 * lp;
            continue;
        }
        switch (tab.ell_residue(p % 31)) {
            case 0:
                acc.log_c11 += 0.75 * lp;
                break;
            case 3:
                acc.log_c11 += 0.25 * lp;
                acc.log_h += std::log1p(-0.5 / p) - 0.5 * lp;
                break;
            default:
                acc.log_c11 += -0.25 * lp;
                break;
        }
    }
    if (!snapped) at_half = acc;
    return {at_half, acc};
}

}  // namespace

double euler_h(uint64_t prime_bound) {
    return std::exp(accumulate(prime_bound).second.log_h);
}

double euler_c11(uint64_t prime_bound) {
    return std::exp(accumulate(prime_bound).second.log_c11);
}

double gamma_three_quarters() { return 1.2254167024651776; }

double lanczos_gamma(double x) {
    // g = 7, 9-term coefficients.
    static const double coef[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const double pi = std::numbers::pi;
    if (x < 0.5)
        return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
    x -= 1.0;
    double a = coef[0];
    double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += coef[i] / (x + i);
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

EulerReport euler_constants(uint64_t prime_bound) {
    if (prime_bound < 100)
        throw std::invalid_argument("euler_constants: prime bound must be at least 100");
    EulerReport r;
    r.prime_bound = prime_bound;
    r.gamma34 = gamma_three_quarters();

    auto [half, full] = accumulate(prime_bound);
    double h = std::exp(full.log_h), h_half = std::exp(half.log_h);
    double c11 = std::exp(full.log_c11), c11_half = std::exp(half.log_c11);
    double c = h * c11 / r.gamma34, c_half = h_half * c11_half / r.gamma34;
    constexpr double factor = 74.0 / 31.0;

    r.h = {h, std::fabs(h - h_half)};
    r.c11 = {c11, std::fabs(c11 - c11_half)};
    r.c = {c, std::fabs(c - c_half)};
    r.kappa = {factor * c, factor * std::fabs(c - c_half)};
    return r;
}

}  // namespace parity31
