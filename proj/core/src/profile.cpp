#include "parity31/profile.hpp"

#include <stdexcept>

#include "parity31/orbits.hpp"
#include "parity31/primes.hpp"

namespace parity31 {

namespace {

int mod12(int x) { return ((x % 12) + 12) % 12; }

// ceil(x/2) for x >= 0.
int ceil_half(int x) { return (x + 1) / 2; }

}  // namespace

OddProfile profile(uint64_t m) {
    if (m < 3 || m % 2 == 0)
        throw std::domain_error("profile: m must be odd and at least 3");
    if (m % 31 == 0)
        throw std::domain_error("profile: m must be coprime to 31");

    const OrbitTable& tab = orbits();
    OddProfile p{};
    for (const auto& [prime, exp] : factorize(m)) {
        (void)exp;
        p.omega[tab.ell(prime)] += 1;
        p.omega_total += 1;
    }
    p.ell = tab.ell(m);

    int alpha = mod12(2 * p.omega[5] - 2 * p.omega[1] + p.omega[4] - p.omega[2]);
    int a = mod12(p.omega[5] - p.omega[1] + p.omega[2] - p.omega[4]);
    p.alpha_prime = mod12(alpha - 2 * p.ell);
    p.a_prime = mod12(a - 4 * p.ell);

    // The exponent gap between the full and the w2+w4 ceiling terms. The
    // branched shortcut must agree with the defining difference; both are
    // kept and compared because a transcription slip here flips verdicts.
    int A = p.w15(), B = p.w24();
    p.t = ceil_half(A + B) - ceil_half(B);
    int branched = (A % 2 == 1 && B % 2 == 1) ? (A - 1) / 2 : ceil_half(A);
    if (p.t != branched)
        throw std::logic_error("profile: exponent gap forms disagree");
    return p;
}

}  // namespace parity31
