#include "parity31/membership.hpp"

#include <bit>
#include <stdexcept>

#include "parity31/orbits.hpp"
#include "parity31/primes.hpp"

namespace parity31 {

namespace {

int mod12(int x) { return ((x % 12) + 12) % 12; }
int mod6(int x) { return ((x % 6) + 6) % 6; }
int ceil_half(int x) { return (x + 1) / 2; }

int64_t pow3_int(int e) {
    int64_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

}  // namespace

std::string to_string(Route r) {
    switch (r) {
        case Route::remark1: return "remark1";
        case Route::remark2: return "remark2";
        case Route::power_of_two: return "power-of-two";
        case Route::power_of_two_31: return "31-power-of-two";
        case Route::theorem3_case_i: return "theorem3-case-i";
        case Route::theorem3_case_ii: return "theorem3-case-ii";
        case Route::theorem3_case_iii: return "theorem3-case-iii";
        case Route::theorem0: return "theorem0";
    }
    return "?";
}

SeriesInput series_input(const OddProfile& p) {
    return SeriesInput{p.omega[3],     p.w24(),   p.w15(), p.omega_total,
                       p.alpha_prime,  p.a_prime, p.ell,   p.omega[0] > 0};
}

Membership::Membership(int prec)
    : table_(constants_table(prec)),
      inv31_(TwoAdic(31, prec).inv()),
      s1_(table_.U[0]),
      s31_(-((TwoAdic(5, prec) + table_.U[0]) * inv31_)) {}

int64_t Membership::mu_class_sum(uint64_t m, int j) const {
    return mu_class_sum(profile(m), j);
}

int64_t Membership::mu_class_sum(const OddProfile& p, int j) const {
    if (p.omega[0] > 0) return 0;  // class-0 divisor pairs cancel
    int alpha = mod12(2 * p.omega[5] - 2 * p.omega[1] + p.omega[4] - p.omega[2]);
    int a = mod12(p.omega[5] - p.omega[1] + p.omega[2] - p.omega[4]);
    int w3 = p.omega[3], b = p.w24(), w = p.omega_total;

    // Six times the sum; the 1/2, 1/3 scales of the three terms clear.
    int64_t six = (int64_t{1} << w3) * pow3_int(ceil_half(b)) * v_weight(alpha - 2 * j);
    if (w3 == 0) six += pow3_int(ceil_half(w)) * v_weight(a - 4 * j);
    if (b == 0) six += (j % 2 ? -1 : 1) * (int64_t{1} << w);
    if (six % 6 != 0)
        throw std::logic_error("mu_class_sum: closed form not an integer");
    return six / 6;
}

TwoAdic Membership::ms(uint64_t m) const { return ms(series_input(profile(m))); }

TwoAdic Membership::ms(const SeriesInput& in) const {
    const int prec = table_.prec;
    if (in.has_class0) return TwoAdic::zero(work_prec());
    if (in.omega < 1 || in.omega > 62)
        throw std::domain_error("ms: distinct-prime count out of range");

    // Doubled three-term form; one exact halving at the end costs the bit.
    int sign = in.ell % 2 ? -1 : 1;
    TwoAdic x = table_.E[mod12(in.alpha_prime)]
                    .scaled(int64_t{1} << in.w3)
                    * TwoAdic::pow3(ceil_half_minus_one(in.w24), prec);
    if (in.w3 == 0)
        x = x + table_.F[mod12(in.a_prime)] *
                    TwoAdic::pow3(ceil_half_minus_one(in.omega), prec);
    if (in.w24 == 0)
        x = x + table_.G.scaled(sign * (int64_t{1} << in.omega)) *
                    TwoAdic(3, prec).inv();
    return x.halve();
}

TwoAdic Membership::ms_divisor_sum(uint64_t m) const {
    OddProfile p = profile(m);  // validates the domain
    (void)p;
    const OrbitTable& tab = orbits();
    std::vector<int> classes;
    for (const auto& [prime, exp] : factorize(m)) {
        (void)exp;
        classes.push_back(tab.ell(prime));
    }
    int ell_m = tab.ell(m);
    TwoAdic acc = TwoAdic::zero(table_.prec);
    for (uint32_t subset = 0; subset < (1u << classes.size()); ++subset) {
        int ell_d = 0;
        for (size_t i = 0; i < classes.size(); ++i)
            if (subset >> i & 1) ell_d += classes[i];
        const TwoAdic& u = table_.U[static_cast<size_t>(mod6(ell_m - ell_d))];
        acc = std::popcount(subset) % 2 ? acc - u : acc + u;
    }
    return acc.reduced(work_prec());
}

TwoAdic Membership::s1(int prec) const { return s1_.reduced(prec); }
TwoAdic Membership::s31(int prec) const { return s31_.reduced(prec); }

GammaResult Membership::gamma(uint64_t m) const { return gamma(profile(m)); }

GammaResult Membership::gamma(const OddProfile& p) const {
    if (p.omega[0] > 0)
        throw std::domain_error("gamma: series vanishes (class-0 prime factor)");
    int w3 = p.omega[3], b = p.w24(), a15 = p.w15();

    auto val_of = [&](const TwoAdic& x) {
        auto v = x.val2();
        if (!v)
            throw std::domain_error("gamma: valuation unresolved at this precision");
        return *v;
    };

    if (w3 != 0 && b != 0)
        return {w3 - 1 + table_.v2_E(p.alpha_prime), GammaCase::i};

    if (w3 != 0) {  // b == 0
        int app = mod12(p.alpha_prime + 6 * p.ell);
        int ve = table_.v2_E(app);
        if (a15 < ve) return {w3 - 1 + a15, GammaCase::ii};
        if (a15 == ve) return {w3 - 1 + table_.delta(app), GammaCase::ii};
        return {w3 - 1 + ve, GammaCase::ii};
    }

    TwoAdic ef = table_.E[static_cast<size_t>(mod12(p.alpha_prime))] +
                 table_.F[static_cast<size_t>(mod12(p.a_prime))] *
                     TwoAdic::pow3(p.t, table_.prec);
    if (b != 0)
        return {-1 + val_of(ef), GammaCase::iii};

    int sign = p.ell % 2 ? -1 : 1;
    TwoAdic full = ef + table_.G.scaled(sign * (int64_t{1} << a15));
    return {-1 + val_of(full), GammaCase::iv};
}

TwoAdic Membership::series_for(uint64_t m, const OddProfile& p, int tau) const {
    TwoAdic s = ms(series_input(p)) * TwoAdic(m, table_.prec).inv();
    if (tau == 1) s = -(s * inv31_);
    return s;
}

MembershipVerdict Membership::member(uint64_t n) const {
    if (n == 0)
        throw std::invalid_argument("member: n must be positive");
    Decomposition d = decompose(n);
    MembershipVerdict v;
    v.k = d.k;
    v.tau = d.tau;
    v.odd_part = d.m;

    if (d.tau >= 2) {
        v.route = Route::remark2;
        return v;
    }
    if (d.m == 1) {
        const TwoAdic& s = d.tau ? s31_ : s1_;
        v.member = s.bit(d.k);
        v.route = d.tau ? Route::power_of_two_31 : Route::power_of_two;
        v.gamma = s.val2();
        return v;
    }
    OddProfile p = profile(d.m);
    if (p.omega[0] > 0) {
        v.route = Route::remark1;
        return v;
    }
    TwoAdic s = series_for(d.m, p, d.tau);
    auto g = s.val2();
    if (!g)
        throw std::logic_error("member: series vanished unexpectedly");
    v.gamma = *g;
    v.member = s.bit(d.k);
    v.route = d.k < *g    ? Route::theorem3_case_i
              : d.k == *g ? Route::theorem3_case_ii
                          : Route::theorem3_case_iii;
    return v;
}

MembershipVerdict Membership::member_theorem3(uint64_t n) const {
    if (n == 0)
        throw std::invalid_argument("member_theorem3: n must be positive");
    Decomposition d = decompose(n);
    if (d.tau >= 2 || d.m == 1)
        throw std::domain_error("member_theorem3: outside the theorem domain");
    OddProfile p = profile(d.m);
    if (p.omega[0] > 0)
        throw std::domain_error("member_theorem3: outside the theorem domain");

    MembershipVerdict v;
    v.k = d.k;
    v.tau = d.tau;
    v.odd_part = d.m;

    GammaResult g = gamma(p);
    v.gamma = g.value;
    if (d.k < g.value) {
        v.route = Route::theorem3_case_i;
        return v;
    }
    if (d.k == g.value) {
        v.member = true;
        v.route = Route::theorem3_case_ii;
        return v;
    }

    int r = d.k - g.value;
    TwoAdic series = ms(series_input(p));
    auto direct = series.val2();
    if (!direct || *direct != g.value)
        throw std::logic_error("member_theorem3: case analysis disagrees with evaluation");
    TwoAdic odd_series = series.shifted_down(g.value);  // Z(m), odd
    TwoAdic l = odd_series * TwoAdic(d.m, table_.prec).inv();
    if (d.tau == 1) l = -(l * inv31_);
    // membership at index gamma + r reads: l lands in {2^r+1, ..., 2^{r+1}-1}
    v.member = l.bit(r);
    v.route = Route::theorem3_case_iii;
    return v;
}

bool Membership::odd_member_theorem0(uint64_t m) const {
    if (m < 3 || m % 2 == 0 || m % 31 == 0)
        throw std::domain_error("odd_member_theorem0: m must be odd, >= 3, coprime to 31");
    const OrbitTable& tab = orbits();
    auto factors = factorize(m);

    if (factors.size() == 1) {  // prime power p^lambda
        auto [prime, lambda] = factors[0];
        switch (tab.ell(prime)) {
            case 1: {
                int r = lambda % 6;
                return r == 1 || r == 3 || r == 4 || r == 5;
            }
            case 2:
            case 4:
                return lambda % 3 == 0 || lambda % 3 == 1;
            case 5: {
                int r = lambda % 6;
                return r == 0 || r == 2 || r == 3 || r == 4;
            }
            default:
                return false;  // classes 0 and 3 contribute no prime powers
        }
    }

    int w[6] = {0, 0, 0, 0, 0, 0};
    int ell_rad = 0;
    for (const auto& [prime, exp] : factors) {
        (void)exp;
        int c = tab.ell(prime);
        w[c] += 1;
        ell_rad += c;
    }
    ell_rad = mod6(ell_rad);
    if (w[0] != 0 || w[3] > 1) return false;

    int ell_n = tab.ell(m);
    if (w[3] == 1) {
        int r = (ell_n + ell_rad) % 3;
        return r == 0 || r == 1;
    }
    int par = ((w[1] + ell_n - ell_rad) % 2 + 2) % 2;
    int dd = mod6(2 * ell_n - ell_rad);
    if (par == 0) return dd >= 2 && dd <= 5;
    return dd == 0 || dd == 4;
}

}  // namespace parity31
