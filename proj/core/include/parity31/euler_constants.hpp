#pragma once

#include <cstdint>

namespace parity31 {

/// A truncated Euler-product value together with the change over the last
/// doubling of the prime bound, reported as an honest error indicator
/// (these products converge like 1/log B; the delta tracks the residual
/// drift, it is not a rigorous bound).
struct TruncatedValue {
    double value = 0.0;
    double delta = 0.0;
};

struct EulerReport {
    uint64_t prime_bound = 0;
    TruncatedValue h;       // product over class-3 primes
    TruncatedValue c11;     // combined three-product constant
    double gamma34 = 0.0;   // Gamma(3/4)
    TruncatedValue c;       // h * c11 / Gamma(3/4)
    TruncatedValue kappa;   // (74/31) c
};

/// Product over class-3 primes p <= bound of (1 - 1/(2p)) (1 - 1/p)^{-1/2}.
double euler_h(uint64_t prime_bound);

/// Truncation of the combined product: per-prime exponents on (1 - 1/p)
/// are +3/4 for p = 2, p = 31 and class 0, -1/4 for classes 1, 2, 4, 5,
/// and +1/4 for class 3. Accumulated in log space.
double euler_c11(uint64_t prime_bound);

/// Gamma(3/4) to double precision (stored constant).
double gamma_three_quarters();

/// Lanczos evaluation of Gamma(x) for x > 0, used to cross-check the
/// stored constant.
double lanczos_gamma(double x);

/// All constants at the given bound, with last-doubling deltas.
EulerReport euler_constants(uint64_t prime_bound);

}  // namespace parity31
