#include "parity31/sigma_constants.hpp"

#include <stdexcept>

namespace parity31 {

namespace {

LiftedPoly cofactor_w(int bits) {
    // (1 - z) P2 P3 P4 P5 P6, degree 26. Any integer lift that reduces to
    // the right polynomial mod 2 yields the same residues mod 2^{k+1} after
    // k Graeffe steps; we lift each factor with 0/1 coefficients and keep
    // the explicit minus sign on (1 - z).
    LiftedPoly w({1, -1}, bits);
    for (int i = 2; i <= 6; ++i) w = w * lift(degree31_factor(i), bits);
    return w;
}

uint64_t low_bits(uint64_t v, int n) {
    return n >= 64 ? v : (v & ((uint64_t{1} << n) - 1));
}

}  // namespace

SigmaEngine::SigmaEngine(int bits)
    : bits_(bits), p_(lift(defining_poly(), bits)), w_(cofactor_w(bits)) {
    if (bits < 1 || bits > 64)
        throw std::invalid_argument("SigmaEngine: bits must be in [1, 64]");
    rows_.reserve(16);
}

void SigmaEngine::advance(int target) {
    while (level_ < target) {
        p_ = graeffe(p_);
        w_ = graeffe(w_);
        ++level_;
    }
}

const std::array<uint64_t, 31>& SigmaEngine::residue_row(int k) {
    if (k < 0 || k + 1 > bits_)
        throw std::invalid_argument("SigmaEngine: iteration needs k + 1 <= bits");
    if (static_cast<size_t>(k) < rows_.size()) return rows_[k];
    for (int lvl = static_cast<int>(rows_.size()); lvl <= k; ++lvl) {
        advance(lvl);
        // q = z P'_(lvl) W_(lvl); sigma values are the coefficient sums of
        // q/(1 - z^31) on each residue class mod 31.
        LiftedPoly q = p_.derivative() * w_;
        std::array<uint64_t, 31> row{};
        for (size_t i = 0; i < q.size(); ++i)
            row[(i + 1) % 31] += q.coeff(i);
        const uint64_t m = bits_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << bits_) - 1);
        for (auto& v : row) v &= m;
        rows_.push_back(row);
    }
    return rows_[k];
}

uint64_t SigmaEngine::sigma(uint64_t n, int k) {
    if (n == 0)
        throw std::invalid_argument("SigmaEngine::sigma: n must be positive");
    return low_bits(residue_row(k)[n % 31], k + 1);
}

std::array<uint64_t, 6> SigmaEngine::u_row(int k) {
    std::array<uint64_t, 6> u{};
    uint64_t p3 = 1;
    for (int j = 0; j < 6; ++j) {
        u[j] = sigma(p3, k);
        p3 = p3 * 3 % 31;
    }
    return u;
}

uint64_t sigma_mod(uint64_t n, int k) {
    SigmaEngine engine(k + 1);
    return engine.sigma(n, k);
}

std::array<uint64_t, 6> u_table(int k) {
    SigmaEngine engine(k + 1);
    return engine.u_row(k);
}

int v_weight(int i) {
    static constexpr int v[12] = {2, 1, 1, 0, -1, -1, -2, -1, -1, 0, 1, 1};
    return v[((i % 12) + 12) % 12];
}

ConstantsTable constants_table(int prec) {
    if (prec < 1 || prec > 64)
        throw std::invalid_argument("constants_table: precision must be in [1, 64]");
    SigmaEngine engine(prec);
    auto u = engine.u_row(prec - 1);

    auto combine = [&](auto weight) {
        TwoAdic acc = TwoAdic::zero(prec);
        for (int j = 0; j < 6; ++j)
            acc = acc + TwoAdic(u[j], prec).scaled(weight(j));
        return acc;
    };

    ConstantsTable t{prec,
                     {TwoAdic(u[0], prec), TwoAdic(u[1], prec), TwoAdic(u[2], prec),
                      TwoAdic(u[3], prec), TwoAdic(u[4], prec), TwoAdic(u[5], prec)},
                     {TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec),
                      TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec),
                      TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec),
                      TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec)},
                     {TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec),
                      TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec),
                      TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec),
                      TwoAdic::zero(prec), TwoAdic::zero(prec), TwoAdic::zero(prec)},
                     TwoAdic::zero(prec)};

    for (int i = 0; i < 12; ++i) {
        t.E[i] = combine([i](int j) { return v_weight(i + 2 * j); });
        t.F[i] = combine([i](int j) { return v_weight(i + 4 * j); });
    }
    t.G = combine([](int j) { return j % 2 ? -1 : 1; });
    return t;
}

int ConstantsTable::v2_E(int i) const {
    auto v = E[((i % 12) + 12) % 12].val2();
    if (!v)
        throw std::domain_error("ConstantsTable::v2_E: unresolved at this precision");
    return *v;
}

int ConstantsTable::delta(int i) const {
    int v = v2_E(i);
    TwoAdic sum = E[((i % 12) + 12) % 12] + G.scaled(int64_t{1} << v);
    auto d = sum.val2();
    if (!d)
        throw std::domain_error("ConstantsTable::delta: unresolved at this precision");
    return *d;
}

TwoAdic eval_root_poly(const TwoAdic& y) {
    static constexpr int64_t coeffs[7] = {1, -1, 3, -11, 44, -36, 32};
    TwoAdic acc = TwoAdic::zero(y.prec());
    for (int64_t c : coeffs) acc = acc * y + TwoAdic::from_signed(c, y.prec());
    return acc;
}

}  // namespace parity31
