#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parity31/binary_poly.hpp"
#include "parity31/census.hpp"
#include "parity31/euler_constants.hpp"
#include "parity31/membership.hpp"
#include "parity31/oracle.hpp"
#include "parity31/sigma_constants.hpp"

using json = nlohmann::json;
using namespace parity31;

namespace {

unsigned default_threads() {
    if (const char* env = std::getenv("PARITY31_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library falls back to hardware concurrency
}

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void emit(const json& doc) { std::printf("%s\n", doc.dump().c_str()); }

json verdict_json(uint64_t n, const MembershipVerdict& v) {
    json j{{"n", n},
           {"member", v.member},
           {"route", to_string(v.route)},
           {"k", v.k},
           {"tau", v.tau},
           {"odd_part", v.odd_part}};
    if (v.gamma) j["gamma"] = *v.gamma;
    return j;
}

std::string verdict_text(const MembershipVerdict& v) {
    std::string s = v.member ? "true (" : "false (";
    s += to_string(v.route);
    if (v.gamma) s += ", gamma=" + std::to_string(*v.gamma);
    s += ")";
    return s;
}

int run_verify();

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"membership, tables and counts for the partition set of 1+z+z^3+z^4+z^5"};
    app.require_subcommand(1);

    // order
    std::string poly_text;
    auto* cmd_order = app.add_subcommand("order", "order of a polynomial over F2");
    cmd_order->add_option("--poly", poly_text, "comma separated exponent list")->required();

    // sigma
    int sigma_k = 0;
    uint64_t sigma_n = 1;
    auto* cmd_sigma = app.add_subcommand("sigma", "divisor sum of 2^k n over the set, mod 2^{k+1}");
    cmd_sigma->add_option("--k", sigma_k, "2-power level")->required()->check(CLI::Range(0, 63));
    cmd_sigma->add_option("--n", sigma_n, "argument")->required();

    // uj
    int uj_k = 11;
    bool uj_json = false;
    auto* cmd_uj = app.add_subcommand(
        "uj", "the six divisor-sum residues of 2^k 3^j, displayed to k bits");
    cmd_uj->add_option("--k", uj_k, "2-power level")->required()->check(CLI::Range(1, 63));
    cmd_uj->add_flag("--json", uj_json);

    // table1
    int table_bits = 11;
    bool table_json = false;
    auto* cmd_table = app.add_subcommand("table1", "E, F, G residues at a given precision");
    cmd_table->add_option("--bits", table_bits, "precision in bits")->check(CLI::Range(1, 64));
    cmd_table->add_flag("--json", table_json);

    // member
    uint64_t member_n = 0;
    std::vector<uint64_t> member_range;
    bool member_json = false;
    auto* cmd_member = app.add_subcommand("member", "membership of n in the partition set");
    cmd_member->add_option("n", member_n, "query value");
    cmd_member->add_option("--range", member_range, "inclusive range a b")->expected(2);
    cmd_member->add_flag("--json", member_json);

    // oracle
    uint64_t oracle_limit = 100000;
    bool oracle_check = false;
    auto* cmd_oracle = app.add_subcommand("oracle", "build the set from the defining congruence");
    cmd_oracle->add_option("--limit", oracle_limit, "build bound")->required();
    cmd_oracle->add_flag("--check", oracle_check, "compare every n against the series verdict");

    // census
    uint64_t census_x = 1000000;
    std::string census_checkpoints;
    bool census_json = false, census_csv = false;
    unsigned census_threads = default_threads();
    auto* cmd_census = app.add_subcommand("census", "counting table A(x), A1..A4, c, c1");
    cmd_census->add_option("--x", census_x, "maximum value")->required();
    cmd_census->add_option("--checkpoints", census_checkpoints, "comma separated checkpoints");
    cmd_census->add_option("--threads", census_threads, "worker threads");
    cmd_census->add_flag("--json", census_json);
    cmd_census->add_flag("--csv", census_csv);

    // constants
    uint64_t prime_bound = 10000000;
    bool constants_json = false;
    auto* cmd_constants = app.add_subcommand("constants", "Euler-product constants with truncation deltas");
    cmd_constants->add_option("--prime-bound", prime_bound, "truncation bound");
    cmd_constants->add_flag("--json", constants_json);

    // verify
    app.add_subcommand("verify", "run the embedded identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_order->parsed()) {
            std::printf("%" PRIu64 "\n", order(BinaryPoly::parse(poly_text)));
        } else if (cmd_sigma->parsed()) {
            std::printf("%" PRIu64 "\n", sigma_mod(sigma_n, sigma_k));
        } else if (cmd_uj->parsed()) {
            // k-bit display row: the top (k+1)-st bit is dropped, matching
            // the published table layout.
            auto u = u_table(uj_k);
            uint64_t mask = (uint64_t{1} << uj_k) - 1;
            for (auto& v : u) v &= mask;
            if (uj_json) {
                emit(json{{"command", "uj"},
                          {"params", {{"k", uj_k}}},
                          {"results", {{"u", u}}}});
            } else {
                std::printf("%" PRIu64 " %" PRIu64 " %" PRIu64 " %" PRIu64 " %" PRIu64
                            " %" PRIu64 "\n",
                            u[0], u[1], u[2], u[3], u[4], u[5]);
            }
        } else if (cmd_table->parsed()) {
            ConstantsTable t = constants_table(table_bits);
            if (table_json) {
                json e = json::array(), f = json::array(), uu = json::array();
                for (int i = 0; i < 6; ++i) e.push_back(t.E[i].residue());
                for (int i = 0; i < 6; ++i) f.push_back(t.F[i].residue());
                for (int i = 0; i < 6; ++i) uu.push_back(t.U[i].residue());
                emit(json{{"command", "table1"},
                          {"params", {{"bits", table_bits}}},
                          {"results", {{"U", uu}, {"E", e}, {"F", f}, {"G", t.G.residue()}}}});
            } else {
                std::printf("Z\tZ mod 2^%d\n", table_bits);
                for (int i = 0; i < 6; ++i)
                    std::printf("E%d\t%" PRIu64 "\n", i, t.E[i].residue());
                for (int i = 0; i < 6; ++i)
                    std::printf("F%d\t%" PRIu64 "\n", i, t.F[i].residue());
                std::printf("G\t%" PRIu64 "\n", t.G.residue());
            }
        } else if (cmd_member->parsed()) {
            Membership mem;
            if (!member_range.empty()) {
                uint64_t lo = member_range[0], hi = member_range[1];
                if (lo == 0 || hi < lo) {
                    std::fprintf(stderr, "member: bad range\n");
                    return 2;
                }
                if (member_json) {
                    json rows = json::array();
                    for (uint64_t n = lo; n <= hi; ++n)
                        rows.push_back(verdict_json(n, mem.member(n)));
                    emit(json{{"command", "member-range"},
                              {"params", {{"from", lo}, {"to", hi}}},
                              {"results", rows}});
                } else {
                    for (uint64_t n = lo; n <= hi; ++n)
                        std::printf("%" PRIu64 " %s\n", n, verdict_text(mem.member(n)).c_str());
                }
            } else {
                if (member_n == 0) {
                    std::fprintf(stderr, "member: need a positive n or --range\n");
                    return 2;
                }
                MembershipVerdict v = mem.member(member_n);
                if (member_json)
                    emit(json{{"command", "member"},
                              {"params", {{"n", member_n}}},
                              {"results", verdict_json(member_n, v)}});
                else
                    std::printf("%s\n", verdict_text(v).c_str());
            }
        } else if (cmd_oracle->parsed()) {
            OracleSet set(oracle_limit);
            std::printf("count %" PRIu64 "\n", set.count_leq(oracle_limit));
            if (oracle_check) {
                Membership mem;
                for (uint64_t n = 1; n <= oracle_limit; ++n) {
                    if (set.member(n) != mem.member(n).member) {
                        std::printf("mismatch at n=%" PRIu64 "\n", n);
                        return 1;
                    }
                }
                std::printf("OK\n");
            }
        } else if (cmd_census->parsed()) {
            CensusConfig cfg;
            cfg.x_max = census_x;
            cfg.threads = census_threads;
            if (census_checkpoints.empty()) {
                for (uint64_t cp = 1000; cp <= census_x; cp *= 10)
                    cfg.checkpoints.push_back(cp);
                if (cfg.checkpoints.empty() || cfg.checkpoints.back() != census_x)
                    cfg.checkpoints.push_back(census_x);
            } else {
                size_t pos = 0;
                while (pos < census_checkpoints.size()) {
                    size_t next = census_checkpoints.find(',', pos);
                    if (next == std::string::npos) next = census_checkpoints.size();
                    cfg.checkpoints.push_back(
                        std::strtoull(census_checkpoints.substr(pos, next - pos).c_str(), nullptr, 10));
                    pos = next + 1;
                }
            }
            Membership mem;
            auto rows = run_census(cfg, mem);
            if (census_json) {
                json out = json::array();
                for (const auto& r : rows)
                    out.push_back(json{{"x", r.x},
                                       {"A", r.a},
                                       {"c", r.c},
                                       {"A1", r.a1},
                                       {"c1", r.c1},
                                       {"A2", r.a2},
                                       {"A3", r.a3},
                                       {"A4", r.a4}});
                emit(json{{"command", "census"},
                          {"params", {{"x", census_x}}},
                          {"results", out}});
            } else {
                const char* sep = census_csv ? "," : "  ";
                std::printf("x%sA%sc%sA1%sc1%sA2%sA3%sA4\n", sep, sep, sep, sep, sep, sep, sep);
                for (const auto& r : rows)
                    std::printf("%" PRIu64 "%s%" PRIu64 "%s%s%s%" PRIu64 "%s%s%s%" PRIu64
                                "%s%" PRIu64 "%s%" PRIu64 "\n",
                                r.x, sep, r.a, sep, fmt(r.c, 4).c_str(), sep, r.a1, sep,
                                fmt(r.c1, 3).c_str(), sep, r.a2, sep, r.a3, sep, r.a4);
            }
        } else if (cmd_constants->parsed()) {
            EulerReport r = euler_constants(prime_bound);
            if (constants_json) {
                emit(json{{"command", "constants"},
                          {"params", {{"prime_bound", prime_bound}}},
                          {"results",
                           {{"H", r.h.value},
                            {"H_delta", r.h.delta},
                            {"C11", r.c11.value},
                            {"C11_delta", r.c11.delta},
                            {"Gamma34", r.gamma34},
                            {"C", r.c.value},
                            {"C_delta", r.c.delta},
                            {"kappa", r.kappa.value},
                            {"kappa_delta", r.kappa.delta}}}});
            } else {
                std::printf("prime_bound %" PRIu64 "\n", r.prime_bound);
                std::printf("H       %.12f  (delta %.3e)\n", r.h.value, r.h.delta);
                std::printf("C11     %.12f  (delta %.3e)\n", r.c11.value, r.c11.delta);
                std::printf("Gamma34 %.12f\n", r.gamma34);
                std::printf("C       %.12f  (delta %.3e)\n", r.c.value, r.c.delta);
                std::printf("kappa   %.12f  (delta %.3e)\n", r.kappa.value, r.kappa.delta);
            }
        } else {  // verify
            return run_verify();
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

namespace {

int run_verify() {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::printf("%s %s\n", ok ? "ok  " : "FAIL", name);
        if (!ok) ++failures;
    };

    ConstantsTable t64 = constants_table(64);
    bool roots = true;
    for (int j = 0; j < 6; ++j)
        roots = roots && eval_root_poly(t64.U[j]).is_zero();
    report("sextic root identity at 64 bits", roots);

    auto u = u_table(10);
    const uint64_t expect_u[6] = {1183, 1598, 1554, 845, 264, 701};
    bool urow = true;
    for (int j = 0; j < 6; ++j) urow = urow && u[j] == expect_u[j];
    report("u row at 11 bits", urow);

    ConstantsTable t11 = constants_table(11);
    const uint64_t expect_e[6] = {1157, 1533, 1394, 1909, 237, 376};
    const uint64_t expect_f[6] = {1987, 166, 559, 393, 620, 227};
    bool residues = t11.G.residue() == 1905;
    for (int i = 0; i < 6; ++i)
        residues = residues && t11.E[i].residue() == expect_e[i] &&
                   t11.F[i].residue() == expect_f[i];
    report("table residues at 11 bits", residues);

    bool structure = true;
    for (int i = 0; i < 6; ++i)
        structure = structure && t64.E[i + 6] == -t64.E[i] && t64.F[i + 6] == -t64.F[i];
    for (int i = 0; i < 12; ++i) {
        int scale = i % 2 ? 1 : 3;
        structure = structure &&
                    (t64.E[i] + t64.E[(i + 2) % 12]) == t64.E[(i + 1) % 12].scaled(scale) &&
                    (t64.F[i] + t64.F[(i + 2) % 12]) == t64.F[(i + 1) % 12].scaled(scale);
    }
    report("index-shift identities", structure);

    Membership mem;
    bool bridge = true;
    for (uint64_t m : {3ull, 9ull, 15ull, 21ull, 33ull, 105ull, 2145ull, 70785ull}) {
        TwoAdic s_m = mem.ms(m) * TwoAdic(m, 63).inv();
        TwoAdic s_31m = -(s_m * TwoAdic(31, 63).inv());
        TwoAdic lhs = s_31m.scaled(31).scaled(static_cast<int64_t>(m)) + mem.ms_divisor_sum(m);
        bridge = bridge && lhs.reduced(32).is_zero();
    }
    report("31-bridge samples at 32 bits", bridge);

    OracleSet oracle(10000);
    bool match = true;
    uint64_t first_bad = 0;
    for (uint64_t n = 1; n <= oracle.limit(); ++n)
        if (oracle.member(n) != mem.member(n).member) {
            match = false;
            first_bad = n;
            break;
        }
    report("oracle vs series membership to 10^4", match);
    if (!match) std::printf("  first mismatch at n=%" PRIu64 "\n", first_bad);

    return failures ? 1 : 0;
}

}  // namespace
