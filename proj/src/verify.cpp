#include "psiforge/verify.hpp"

#include <chrono>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "psiforge/algebra.hpp"
#include "psiforge/classify.hpp"
#include "psiforge/errors.hpp"
#include "psiforge/families.hpp"
#include "psiforge/lattice.hpp"
#include "psiforge/psi.hpp"
#include "psiforge/spec_ast.hpp"

namespace psiforge {

namespace {

std::uint64_t to_u64(const BigInt& v, const char* what) {
    require_internal(v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()),
                     std::string(what) + " fits in 64 bits");
    return v.convert_to<std::uint64_t>();
}

struct SuiteReport {
    std::ostream& out;
    bool all_ok = true;

    void check(bool ok, const std::string& what) {
        out << (ok ? "ok - " : "FAIL - ") << what << "\n";
        if (!ok) all_ok = false;
    }

    void note(const std::string& what) { out << "note - " << what << "\n"; }
};

std::string verdict_of(const BpsiVerdict& v) { return to_string(v.verdict); }

// ---------------------------------------------------------------- formulas

void suite_formulas(SuiteReport& r, std::uint64_t) {
    {
        std::size_t count = 0;
        bool all = true;
        std::string bad;
        for (std::uint64_t p = 2; p <= 1024; ++p) {
            if (!is_prime(p)) continue;
            std::uint32_t n = 1;
            for (std::uint64_t pk = p; pk <= 1024; pk *= p, ++n) {
                ++count;
                if (psi_cyclic_prime_power(p, n) != psi_direct(cyclic(pk)).psi) {
                    all = false;
                    if (bad.empty()) bad = "C" + std::to_string(pk);
                }
                if (pk > 1024 / p) break;
            }
        }
        r.check(all, "cyclic prime-power closed form matches the element sum on all " +
                         std::to_string(count) + " prime powers up to 1024" +
                         (all ? "" : " (first mismatch " + bad + ")"));
    }
    {
        std::size_t count = 0;
        bool all = true;
        for (std::uint64_t p = 2; p <= 729; ++p) {
            if (!is_prime(p)) continue;
            std::uint32_t a = 1;
            for (std::uint64_t pa = p; pa <= 729; pa *= p, ++a) {
                ++count;
                if (psi_elementary_abelian(p, a) !=
                    psi_direct(elementary_abelian(p, a)).psi)
                    all = false;
                if (pa > 729 / p) break;
            }
        }
        r.check(all, "elementary abelian closed form matches the element sum on all " +
                         std::to_string(count) + " groups of order up to 729");
    }
    {
        struct Anchor {
            const char* spec;
            std::uint64_t psi;
        };
        const Anchor anchors[] = {
            {"S3", 13},     {"D10", 31},    {"A4", 31},   {"C5", 21},
            {"Q8", 27},     {"A5", 211},    {"C6", 21},   {"C4", 11},
            {"C9", 61},     {"E(2,2)", 7},  {"E(3,3)", 79}, {"C7", 43},
        };
        bool all = true;
        std::string bad;
        for (const auto& a : anchors) {
            BigInt got = psi_direct(build_spec(a.spec)).psi;
            if (got != BigInt(a.psi)) {
                all = false;
                if (bad.empty())
                    bad = std::string(a.spec) + " gave " + got.str() + ", want " +
                          std::to_string(a.psi);
            }
        }
        r.check(all, std::string("psi anchor values (S3, D10, A4, C5, Q8, A5, ...)") +
                         (all ? "" : ": " + bad));
    }
    {
        const char* corpus[] = {"S3",      "D8",  "D10",   "Q8",  "A4",
                                "SL(2,3)", "C12", "Heis3", "E(2,3)", "M3(3)"};
        bool all = true;
        for (const char* s : corpus) {
            GroupPtr g = build_spec(s);
            BigInt a = psi_direct(g).psi;
            BigInt b = psi_via_classes(g).psi;
            BigInt c = psi_via_cyclic_subgroups(g).psi;
            if (a != b || b != c) all = false;
        }
        r.check(all, "direct, conjugacy-class, and cyclic-subgroup psi agree on the "
                     "sample corpus");
    }
    {
        bool all = true;
        std::size_t count = 0;
        for (std::uint64_t p = 2; p <= 31; ++p) {
            if (!is_prime(p)) continue;
            for (std::uint64_t q = 2; q <= 31; ++q) {
                if (q == p || !is_prime(q)) continue;
                for (std::uint32_t a = 1; a <= 6; ++a)
                    for (std::uint32_t b = 2; b <= 5; ++b) {
                        ++count;
                        if (!psi_coprime_product_exceeds(p, q, a, b)) all = false;
                    }
            }
        }
        r.check(all, "coprime product bound holds on the whole grid p,q <= 31, "
                     "a <= 6, 2 <= b <= 5 (" +
                         std::to_string(count) + " cases)");
        // Two instances tied back to actual groups: the left side is psi of
        // E(p,a) x E(q,b-1), the right side the order of a would-be group
        // with a C_{q^b} on top.
        BigInt lhs = psi_direct(build_spec("E(2,2) x C3")).psi;
        r.check(lhs == BigInt(49) && 49 > 4 * 9,
                "instance (2,3,2,2): psi(E(2,2) x C3) = 49 > 36");
        BigInt lhs2 = psi_direct(build_spec("E(3,1) x E(2,1)")).psi;
        r.check(lhs2 == BigInt(21) && 21 > 3 * 4,
                "instance (3,2,1,2): psi(C3 x C2) = 21 > 12");
    }
    {
        r.check(!ineq_1(3, 13, 3, 6), "ineq_1(3,13,3,6) is false");
        r.check(ineq_1(2, 5, 4, 5), "ineq_1(2,5,4,5) is true");
        r.check(ineq_1(2, 3, 2, 3), "ineq_1(2,3,2,3) is true");
        r.check(!ineq_2(BigInt(27), 3, 3), "ineq_2(27,3,3) is false (27 >= 24)");
        r.check(ineq_2(BigInt(63), 4, 5), "ineq_2(63,4,5) is true (63 < 80)");
    }
    {
        auto b32 = special2_bounds(3, 2);
        r.check(b32.first == BigInt(15) && b32.second == BigInt(27),
                "special2_bounds(3,2) = (15, 27)");
        auto b54 = special2_bounds(5, 4);
        r.check(b54.first == BigInt(63) && b54.second == BigInt(123),
                "special2_bounds(5,4) = (63, 123)");
        auto b11 = special2_bounds(1, 1);
        r.check(b11.first == BigInt(3) && b11.second == BigInt(5),
                "special2_bounds(1,1) = (3, 5)");
        GroupPtr q8 = quaternion(8);
        std::uint64_t phi_order = frattini(q8).count();
        r.check(psi_direct(q8).psi == b32.second,
                "psi(Q8) = 27 attains the (3,2) upper bound");
        r.check(phi_order == 2, "computed Frattini subgroup of Q8 has order 2");
        r.note("special2_bounds takes the Frattini subgroup of a rank-r special "
               "2-group of order 2^alpha to have order 2^(alpha-r); the "
               "alpha=3, r=2 instance is Q8, where the computed Frattini order "
               "is 2 and psi attains the upper bound 27.");
    }
}

// ---------------------------------------------------------------- theorems

bool abelian_expected_bounded(const GroupPtr& g) {
    if (is_elementary_abelian(g)) return true;
    auto f = factorize(g->size());
    return f.size() == 1 && f[0].exponent == 2 && is_cyclic(g);
}

void suite_theorems(SuiteReport& r, std::uint64_t budget) {
    {
        std::size_t count = 0;
        bool all = true;
        std::string bad;
        for (std::uint64_t n = 1; n <= 60; ++n) {
            for (const GroupPtr& g : abelian_groups_of_order(n)) {
                ++count;
                BpsiVerdict cls = classify_abelian(g);
                BpsiVerdict brute = bpsi_bruteforce(g, budget);
                bool expected = abelian_expected_bounded(g);
                bool ok = cls.verdict == brute.verdict &&
                          (cls.verdict == BpsiAnswer::yes) == expected;
                if (!ok && bad.empty()) bad = g->name();
                all = all && ok;
            }
        }
        r.check(all, "abelian classification = brute force = (C_{p^2} or "
                     "elementary abelian) on all " +
                         std::to_string(count) + " abelian groups of order <= 60" +
                         (all ? "" : " (first mismatch " + bad + ")"));
    }
    {
        struct Case {
            const char* spec;
            bool bounded;
        };
        const Case cases[] = {
            {"D8", false},        {"Q8", false},      {"Q16", false},
            {"Heis3", true},      {"Heis5", true},    {"M3(3)", false},
            {"C4 x C2", false},   {"C9 x C3", false}, {"C4 x C9", false},
            {"C8", false},        {"C25", true},      {"D8 x C9", false},
            {"Q8 x C3", false},   {"E(2,3) x E(3,2)", false},
        };
        bool all = true;
        std::string bad;
        for (const auto& c : cases) {
            GroupPtr g = build_spec(c.spec);
            if (!is_nilpotent(g)) {
                all = false;
                bad = std::string(c.spec) + " not nilpotent";
                break;
            }
            BpsiVerdict cls = classify_nilpotent(g);
            BpsiVerdict brute = bpsi_bruteforce(g, budget);
            bool ok = cls.verdict == brute.verdict &&
                      (cls.verdict == BpsiAnswer::yes) == c.bounded;
            if (!ok && bad.empty()) bad = c.spec;
            all = all && ok;
        }
        r.check(all, "nilpotent classification = brute force = (C_{p^2} or "
                     "exponent p) on the nilpotent corpus" +
                         (all ? std::string() : " (first mismatch " + bad + ")"));
    }
    {
        struct Case {
            const char* spec;
            bool fires;
        };
        const Case cases[] = {
            {"S3", true},          {"C6", true},    {"D10", true},
            {"Schmidt(7,3)", true}, {"P(3,7,2)", true}, {"P(2,5,2)", true},
            {"A4", false},         {"A5", false},   {"SL(2,3)", false},
        };
        bool all = true;
        std::string bad;
        for (const auto& c : cases) {
            GroupPtr g = build_spec(c.spec);
            bool fires = normal_hall_criterion(g);
            bool ok = fires == c.fires;
            if (ok && fires)
                ok = bpsi_bruteforce(g, budget).verdict == BpsiAnswer::no;
            if (!ok && bad.empty()) bad = c.spec;
            all = all && ok;
        }
        r.check(all, "normal-Hall screen fires exactly where expected and brute "
                     "force confirms every firing" +
                         (all ? std::string() : " (first mismatch " + bad + ")"));
    }
    {
        bool all = true;
        std::string bad;
        const std::pair<std::uint64_t, std::uint64_t> pq[] = {
            {7, 2}, {7, 3}, {5, 2}, {13, 3}};
        for (auto [p, q] : pq)
            for (std::uint32_t n = 2; n <= 3; ++n) {
                GroupPtr g = p_group_P(n, p, q);
                BpsiVerdict cls = classify_p_group_P(g);
                BpsiVerdict brute = bpsi_bruteforce(g, budget);
                bool ok = cls.verdict == BpsiAnswer::no &&
                          brute.verdict == BpsiAnswer::no && cls.witness &&
                          cls.witness->psi >= g->size();
                if (!ok && bad.empty()) bad = g->name();
                all = all && ok;
            }
        for (std::uint32_t n = 2; n <= 3; ++n) {
            GroupPtr g = p_group_P(n, 7);
            BpsiVerdict cls = classify_p_group_P(g);
            bool ok = cls.verdict == BpsiAnswer::yes &&
                      bpsi_bruteforce(g, budget).verdict == BpsiAnswer::yes;
            if (!ok && bad.empty()) bad = g->name();
            all = all && ok;
        }
        r.check(all, "power-action classification (bounded iff elementary "
                     "abelian) agrees with brute force" +
                         (all ? std::string() : " (first mismatch " + bad + ")"));
    }
    {
        struct Case {
            const char* spec;
            bool hereditary;
        };
        const Case cases[] = {
            {"E(2,3)", true}, {"E(5,2)", true}, {"Heis3", true}, {"C4", true},
            {"C9", true},     {"C8", false},    {"C27", false},  {"M3(3)", false},
            {"D8", false},    {"Q8", false},
        };
        bool all = true;
        std::string bad;
        for (const auto& c : cases) {
            GroupPtr g = build_spec(c.spec);
            bool got = hereditary_bounded_p_group(g, budget);
            bool cls = classify_nilpotent(g).verdict == BpsiAnswer::yes;
            bool ok = got == c.hereditary && got == cls;
            if (!ok && bad.empty()) bad = c.spec;
            all = all && ok;
        }
        r.check(all, "a p-group is bounded exactly when every subgroup is "
                     "(hereditary check = classification)" +
                         (all ? std::string() : " (first mismatch " + bad + ")"));
    }
    {
        // Minimal non-nilpotent structure: decomposition fields and verdicts.
        GroupPtr a4 = build_spec("Schmidt(2,3)");
        SchmidtDecomposition d = schmidt_decompose(a4, budget);
        r.check(d.p == 2 && d.q == 3 && d.alpha == 2 && d.beta == 1 && d.r == 2 &&
                    d.kernel_abelian && !d.kernel_special && d.n_q == 4,
                "Schmidt(2,3) decomposes as (p,q,alpha,beta,r) = (2,3,2,1,2), "
                "abelian kernel, 4 Sylow 3-subgroups");
        BpsiVerdict va4 = classify_schmidt(d, a4);
        r.check(va4.verdict == BpsiAnswer::yes &&
                    va4.method == BpsiMethod::schmidt_kernel_abelian &&
                    bpsi_bruteforce(a4, budget).verdict == BpsiAnswer::yes,
                "Schmidt(2,3): abelian-kernel branch says bounded, brute force "
                "agrees");

        GroupPtr s3 = build_spec("S3");
        SchmidtDecomposition ds3 = schmidt_decompose(s3, budget);
        BpsiVerdict vs3 = classify_schmidt(ds3, s3);
        r.check(ds3.p == 3 && ds3.q == 2 && vs3.verdict == BpsiAnswer::no &&
                    vs3.method == BpsiMethod::schmidt_necessity && vs3.witness &&
                    vs3.witness->psi == 7,
                "S3 is minimal non-nilpotent with p > q: not bounded, witness "
                "C3 with psi 7 >= 6");

        GroupPtr g73 = build_spec("Schmidt(7,3)");
        SchmidtDecomposition d73 = schmidt_decompose(g73, budget);
        BpsiVerdict v73 = classify_schmidt(d73, g73);
        r.check(v73.verdict == BpsiAnswer::no && v73.witness &&
                    v73.witness->order == 7 && v73.witness->psi == 43 &&
                    bpsi_bruteforce(g73, budget).verdict == BpsiAnswer::no,
                "Schmidt(7,3) (order 21): p > q forces a violator, witness C7 "
                "with psi 43 >= 21");

        GroupPtr g232 = build_spec("Schmidt(2,3,2)");
        SchmidtDecomposition d232 = schmidt_decompose(g232, budget);
        BpsiVerdict v232 = classify_schmidt(d232, g232);
        r.check(g232->size() == 36 && d232.beta == 2 &&
                    v232.verdict == BpsiAnswer::no && v232.witness &&
                    v232.witness->order == 12 && v232.witness->psi == 49 &&
                    bpsi_bruteforce(g232, budget).verdict == BpsiAnswer::no,
                "Schmidt(2,3,2) (order 36): beta = 2 forces a violator, witness "
                "of order 12 with psi 49 >= 36");

        GroupPtr sl23 = build_spec("SL(2,3)");
        SchmidtDecomposition dsl = schmidt_decompose(sl23, budget);
        r.check(dsl.p == 2 && dsl.q == 3 && dsl.alpha == 3 && dsl.r == 2 &&
                    !dsl.kernel_abelian && dsl.kernel_special &&
                    dsl.frattini_order == 2,
                "SL(2,3) decomposes with a non-abelian special kernel Q8, "
                "Frattini order 2 = 2^(alpha-r)");
        BpsiVerdict vsl = classify_schmidt(dsl, sl23);
        BpsiVerdict bsl = bpsi_bruteforce(sl23, budget);
        r.check(vsl.verdict == BpsiAnswer::unknown &&
                    vsl.method == BpsiMethod::schmidt_inconclusive,
                "SL(2,3): the sufficient branches stay silent (ineq_2 fails)");
        r.check(bsl.verdict == BpsiAnswer::no && bsl.witness &&
                    bsl.witness->order == 8 && bsl.witness->psi == 27,
                "SL(2,3): brute force finds the violator Q8 with psi 27 >= 24");

        r.check(!is_schmidt(build_spec("S4"), budget) &&
                    !is_schmidt(build_spec("A5"), budget) &&
                    !is_schmidt(build_spec("C6"), budget),
                "S4, A5, C6 are not minimal non-nilpotent");
    }
    {
        BpsiVerdict a5 = bpsi_auto(build_spec("A5"), budget);
        r.check(a5.verdict == BpsiAnswer::yes && a5.method == BpsiMethod::brute &&
                    a5.witness && a5.witness->psi == 31,
                "auto dispatch on A5: brute force, bounded, largest maximal psi 31");
        BpsiVerdict a4 = bpsi_auto(build_spec("A4"), budget);
        r.check(a4.verdict == BpsiAnswer::yes &&
                    a4.method == BpsiMethod::schmidt_kernel_abelian,
                "auto dispatch on A4 routes through the abelian-kernel branch");
        BpsiVerdict g21 = bpsi_auto(build_spec("Schmidt(7,3)"), budget);
        r.check(g21.verdict == BpsiAnswer::no &&
                    g21.method == BpsiMethod::normal_hall,
                "auto dispatch on Schmidt(7,3) stops at the normal-Hall screen");
        BpsiVerdict sl = bpsi_auto(build_spec("SL(2,3)"), budget);
        r.check(sl.verdict == BpsiAnswer::no && sl.method == BpsiMethod::brute,
                "auto dispatch on SL(2,3) falls through to brute force");
        BpsiVerdict thm = bpsi_theorems(build_spec("S4"), budget);
        r.check(thm.verdict == BpsiAnswer::unknown && thm.method == BpsiMethod::none,
                "theorem-only dispatch on S4 reports unknown (no route applies)");
    }
}

// ------------------------------------------------------------------- table

void suite_table(SuiteReport& r, bool extended, std::uint64_t budget) {
    auto rows = extended ? table_rows_extended() : table_rows_core();
    for (const auto& row : rows) {
        VerdictRecord rec = evaluate_spec(row.spec, "brute", budget);
        bool ok = rec.order == row.order && rec.verdict == "true";
        std::ostringstream what;
        what << row.spec << " (order " << rec.order << "): verdict " << rec.verdict
             << " by " << rec.method << " in " << rec.elapsed_ms << " ms";
        if (rec.order != row.order)
            what << " [order mismatch, expected " << row.order << "]";
        r.check(ok, what.str());
    }
    r.note("rows whose kernels are non-abelian special p-groups (orders 160, "
           "320, 448, 1215, 1280) have no constructor recipe and are reachable "
           "only through File(...) with user-supplied generators.");
    if (!extended)
        r.note("the order-448 row stands in for both inequivalent actions of "
               "C7 on C2^6; the constructor realizes the diagonal one.");
}

} // namespace

// ------------------------------------------------------------ public pieces

std::vector<TableRow> table_rows_core() {
    return {
        {"A4", 12},           {"FrobSum(2,3,2)", 48}, {"Schmidt(2,7)", 56},
        {"A5", 60},           {"Schmidt(2,5)", 80},   {"SL(2,5)", 120},
        {"PSL(2,7)", 168},    {"FrobSum(2,3,3)", 192}, {"SL(2,7)", 336},
        {"Schmidt(3,13)", 351}, {"A6", 360},          {"Schmidt(3,5)", 405},
        {"FrobSum(2,7,2)", 448}, {"PSL(2,8)", 504},
    };
}

std::vector<TableRow> table_rows_extended() {
    return {
        {"PSL(2,11)", 660},  {"SL(2,9)", 720},    {"FrobSum(2,3,4)", 768},
        {"Schmidt(2,31)", 992}, {"PSL(2,13)", 1092}, {"SL(2,11)", 1320},
    };
}

VerdictRecord evaluate_spec(const std::string& spec_text,
                            const std::string& method_flag, std::uint64_t budget) {
    if (method_flag != "auto" && method_flag != "brute" && method_flag != "theorem")
        fail(Errc::argument_error,
             "unknown method '" + method_flag + "' (auto | brute | theorem)");
    auto t0 = std::chrono::steady_clock::now();
    GroupSpec ast = parse_spec(spec_text);
    GroupPtr g = build_group(ast);
    VerdictRecord rec;
    rec.spec = print_spec(ast);
    rec.order = g->size();
    rec.psi = to_u64(psi_direct(g).psi, "psi of the whole group");
    BpsiVerdict v = method_flag == "brute"    ? bpsi_bruteforce(g, budget)
                    : method_flag == "theorem" ? bpsi_theorems(g, budget)
                                               : bpsi_auto(g, budget);
    rec.verdict = verdict_of(v);
    rec.method = to_string(v.method);
    if (v.witness)
        rec.witness =
            WitnessRecord{v.witness->order, v.witness->psi, v.witness->hint};
    rec.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    return rec;
}

std::vector<GroupPtr> abelian_groups_of_order(std::uint64_t n) {
    if (n == 1) return {cyclic(1)};
    auto factors = factorize(n);

    // Partitions of each prime exponent, parts descending.
    auto partitions = [](std::uint32_t e) {
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<std::uint32_t> cur;
        auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t maxpart) -> void {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (std::uint32_t part = std::min(left, maxpart); part >= 1; --part) {
                cur.push_back(part);
                self(self, left - part, part);
                cur.pop_back();
            }
        };
        rec(rec, e, e);
        return out;
    };

    std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
    per_prime.reserve(factors.size());
    for (const auto& f : factors) per_prime.push_back(partitions(f.exponent));

    std::vector<GroupPtr> out;
    std::vector<std::size_t> pick(factors.size(), 0);
    for (;;) {
        GroupPtr acc;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::uint32_t part : per_prime[i][pick[i]]) {
                std::uint64_t pk = 1;
                for (std::uint32_t j = 0; j < part; ++j) pk *= factors[i].prime;
                GroupPtr c = cyclic(pk);
                acc = acc ? direct_product(acc, c) : c;
            }
        }
        out.push_back(acc);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_prime[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

bool run_verify_suite(const std::string& name, std::ostream& out,
                      std::uint64_t budget) {
    SuiteReport r{out};
    if (name == "formulas")
        suite_formulas(r, budget);
    else if (name == "theorems")
        suite_theorems(r, budget);
    else if (name == "table-core")
        suite_table(r, false, budget);
    else if (name == "table-extended")
        suite_table(r, true, budget);
    else
        fail(Errc::argument_error,
             "unknown suite '" + name +
                 "' (formulas | theorems | table-core | table-extended)");
    out << (r.all_ok ? "suite " + name + ": all checks passed"
                     : "suite " + name + ": FAILURES above")
        << "\n";
    return r.all_ok;
}

} // namespace psiforge
