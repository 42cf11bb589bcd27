#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "psiforge/classify.hpp"
#include "psiforge/errors.hpp"
#include "psiforge/families.hpp"
#include "psiforge/lattice.hpp"
#include "psiforge/psi.hpp"
#include "psiforge/spec_ast.hpp"

using namespace psiforge;
using Index = FiniteGroup::Index;

namespace {

void check_witness_integrity(const BpsiVerdict& v) {
    REQUIRE(v.witness.has_value());
    const BpsiWitness& w = *v.witness;
    CHECK(is_subgroup_mask(v.group, w.mask));
    CHECK(w.mask.count() == w.order);
    CHECK(w.order < v.group->size());  // always a proper subgroup
    CHECK(psi_of_mask(w.mask) == w.psi);
    if (v.verdict == BpsiAnswer::no) CHECK(w.psi >= v.group->size());
}

}  // namespace

TEST_CASE("brute force verdicts with verified certificates") {
    struct Case {
        const char* spec;
        BpsiAnswer want;
        std::uint64_t witness_psi;  // violator psi, or largest maximal psi
    };
    const std::vector<Case> cases = {
        {"C4", BpsiAnswer::yes, 3},        {"C9", BpsiAnswer::yes, 7},
        {"C25", BpsiAnswer::yes, 21},      {"E(2,3)", BpsiAnswer::yes, 7},
        {"Heis3", BpsiAnswer::yes, 25},    {"A4", BpsiAnswer::yes, 7},
        {"A5", BpsiAnswer::yes, 31},       {"Schmidt(2,3)", BpsiAnswer::yes, 7},
        {"C8", BpsiAnswer::no, 11},        {"Q8", BpsiAnswer::no, 11},
        {"S3", BpsiAnswer::no, 7},         {"C6", BpsiAnswer::no, 7},
        {"D10", BpsiAnswer::no, 21},       {"SL(2,3)", BpsiAnswer::no, 27},
        {"Schmidt(7,3)", BpsiAnswer::no, 43}, {"S4", BpsiAnswer::no, 31},
        // brute meets the cyclic seed C9 (psi 61 >= 36) before the order-12
        // subgroup the necessity branch would name
        {"Schmidt(2,3,2)", BpsiAnswer::no, 61},
    };
    for (const auto& c : cases) {
        CAPTURE(c.spec);
        BpsiVerdict v = bpsi_bruteforce(build_spec(c.spec));
        CHECK(v.verdict == c.want);
        CHECK(v.method == BpsiMethod::brute);
        check_witness_integrity(v);
        CHECK(v.witness->psi == c.witness_psi);
        if (v.verdict == BpsiAnswer::yes)
            CHECK(verify_maximality(v.group, v.witness->mask));
    }
    // the trivial group is vacuously bounded and has no proper subgroup to
    // offer as a witness
    BpsiVerdict t = bpsi_bruteforce(build_spec("C1"));
    CHECK(t.verdict == BpsiAnswer::yes);
    CHECK_FALSE(t.witness.has_value());
}

TEST_CASE("brute force respects the budget") {
    CHECK_THROWS_AS(bpsi_bruteforce(build_spec("A5"), 10), Error);
    try {
        bpsi_bruteforce(build_spec("A5"), 10);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::budget_exceeded);
    }
}

TEST_CASE("abelian classification") {
    struct Case {
        const char* spec;
        BpsiAnswer want;
    };
    const std::vector<Case> cases = {
        {"C1", BpsiAnswer::yes},      {"C2", BpsiAnswer::yes},
        {"C4", BpsiAnswer::yes},      {"C9", BpsiAnswer::yes},
        {"C49", BpsiAnswer::yes},     {"E(2,4)", BpsiAnswer::yes},
        {"E(5,3)", BpsiAnswer::yes},  {"C8", BpsiAnswer::no},
        {"C6", BpsiAnswer::no},       {"C12", BpsiAnswer::no},
        {"C2 x C4", BpsiAnswer::no},  {"C4 x C9", BpsiAnswer::no},
        {"C2 x C2 x C3", BpsiAnswer::no},
    };
    for (const auto& c : cases) {
        CAPTURE(c.spec);
        BpsiVerdict v = classify_abelian(build_spec(c.spec));
        CHECK(v.verdict == c.want);
        CHECK(v.method == BpsiMethod::abelian);
        if (v.verdict == BpsiAnswer::no) check_witness_integrity(v);
        CHECK(bpsi_bruteforce(build_spec(c.spec)).verdict == c.want);
    }
    CHECK_THROWS_AS(classify_abelian(build_spec("S3")), Error);
    try {
        classify_abelian(build_spec("S3"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_abelian);
    }
}

TEST_CASE("nilpotent classification") {
    struct Case {
        const char* spec;
        BpsiAnswer want;
    };
    const std::vector<Case> cases = {
        {"C4", BpsiAnswer::yes},    {"C25", BpsiAnswer::yes},
        {"Heis3", BpsiAnswer::yes}, {"Heis5", BpsiAnswer::yes},
        {"E(3,3)", BpsiAnswer::yes}, {"D8", BpsiAnswer::no},
        {"Q8", BpsiAnswer::no},     {"Q16", BpsiAnswer::no},
        {"M3(3)", BpsiAnswer::no},  {"C8", BpsiAnswer::no},
        {"C6", BpsiAnswer::no},     {"C4 x C9", BpsiAnswer::no},
        {"D8 x C9", BpsiAnswer::no}, {"Q8 x C3", BpsiAnswer::no},
    };
    for (const auto& c : cases) {
        CAPTURE(c.spec);
        BpsiVerdict v = classify_nilpotent(build_spec(c.spec));
        CHECK(v.verdict == c.want);
        CHECK(v.method == BpsiMethod::nilpotent);
        if (v.verdict == BpsiAnswer::no) check_witness_integrity(v);
        CHECK(bpsi_bruteforce(build_spec(c.spec)).verdict == c.want);
    }
    CHECK_THROWS_AS(classify_nilpotent(build_spec("S3")), Error);
    try {
        classify_nilpotent(build_spec("A4"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_nilpotent);
    }
}

TEST_CASE("normal Hall screen") {
    for (const char* spec :
         {"S3", "C6", "D10", "Schmidt(7,3)", "P(3,7,2)", "P(2,5,2)", "D12",
          "C30", "Schmidt(3,2)"})
        CHECK(normal_hall_criterion(build_spec(spec)));
    for (const char* spec : {"A4", "A5", "SL(2,3)", "S4", "Schmidt(2,3)",
                             "FrobSum(2,3,2)", "SL(2,5)"})
        CHECK_FALSE(normal_hall_criterion(build_spec(spec)));
    // a single prime divisor leaves no Hall subgroup to speak of
    CHECK_THROWS_AS(normal_hall_criterion(build_spec("Q8")), Error);
    try {
        normal_hall_criterion(build_spec("C9"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_applicable);
    }
    // every firing is confirmed by brute force
    for (const char* spec : {"S3", "C6", "D10", "Schmidt(7,3)", "P(3,7,2)"})
        CHECK(bpsi_bruteforce(build_spec(spec)).verdict == BpsiAnswer::no);
}

TEST_CASE("power-action recognition and classification") {
    // elementary abelian: bounded
    for (const char* spec : {"E(2,3)", "E(7,2)", "C5"}) {
        BpsiVerdict v = classify_p_group_P(build_spec(spec));
        CHECK(v.verdict == BpsiAnswer::yes);
        CHECK(v.method == BpsiMethod::p_group);
    }
    // non-trivial power action: the kernel itself violates the bound
    for (auto [n, p, q] :
         std::vector<std::tuple<std::uint32_t, std::uint64_t, std::uint64_t>>{
             {2, 3, 2}, {2, 5, 2}, {3, 7, 2}, {3, 7, 3}, {2, 13, 3}, {4, 5, 2}}) {
        auto g = p_group_P(n, p, q);
        CAPTURE(g->name());
        BpsiVerdict v = classify_p_group_P(g);
        CHECK(v.verdict == BpsiAnswer::no);
        CHECK(v.method == BpsiMethod::p_group);
        check_witness_integrity(v);
        std::uint64_t kn = 1;
        for (std::uint32_t i = 0; i + 1 < n; ++i) kn *= p;
        CHECK(v.witness->order == kn);
        CHECK(bpsi_bruteforce(g).verdict == BpsiAnswer::no);
    }
    // recognition is structural, not name-based: S3 fits the shape
    BpsiVerdict s3 = classify_p_group_P(build_spec("S3"));
    CHECK(s3.verdict == BpsiAnswer::no);
    CHECK(s3.witness->psi == 7);
    // A4's action permutes the involutions, which no power map does
    CHECK_THROWS_AS(classify_p_group_P(build_spec("A4")), Error);
    try {
        classify_p_group_P(build_spec("A4"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_p_group);
    }
    CHECK_THROWS_AS(classify_p_group_P(build_spec("Q8")), Error);
    CHECK_THROWS_AS(classify_p_group_P(build_spec("C4")), Error);
    CHECK_THROWS_AS(classify_p_group_P(build_spec("Heis3")), Error);
    CHECK_THROWS_AS(classify_p_group_P(build_spec("Schmidt(2,3,2)")), Error);
}

TEST_CASE("minimal non-nilpotent recognition") {
    for (const char* spec :
         {"S3", "A4", "Schmidt(7,3)", "Schmidt(2,5)", "Schmidt(2,7)",
          "Schmidt(2,3,2)", "Schmidt(5,2,2)", "SL(2,3)", "D10"})
        CHECK(is_schmidt(build_spec(spec)));
    for (const char* spec :
         {"C6", "Q8", "S4", "A5", "D12", "FrobSum(2,3,2)", "C30",
          "Heis3", "S3 x C2"})
        CHECK_FALSE(is_schmidt(build_spec(spec)));
}

TEST_CASE("decomposition of minimal non-nilpotent groups") {
    auto d = schmidt_decompose(build_spec("Schmidt(2,3)"));
    CHECK(d.p == 2);
    CHECK(d.q == 3);
    CHECK(d.alpha == 2);
    CHECK(d.beta == 1);
    CHECK(d.r == 2);
    CHECK(d.kernel_abelian);
    CHECK_FALSE(d.kernel_special);
    CHECK(d.n_q == 4);
    CHECK(d.kernel.count() == 4);

    auto ds3 = schmidt_decompose(build_spec("S3"));
    CHECK(ds3.p == 3);
    CHECK(ds3.q == 2);
    CHECK(ds3.alpha == 1);
    CHECK(ds3.beta == 1);
    CHECK(ds3.r == 1);
    CHECK(ds3.kernel_abelian);

    auto d80 = schmidt_decompose(build_spec("Schmidt(2,5)"));
    CHECK(d80.p == 2);
    CHECK(d80.q == 5);
    CHECK(d80.alpha == 4);
    CHECK(d80.r == 4);
    CHECK(d80.kernel_abelian);
    CHECK(d80.n_q == 16);

    auto d232 = schmidt_decompose(build_spec("Schmidt(2,3,2)"));
    CHECK(d232.beta == 2);
    CHECK(d232.alpha == 2);
    CHECK(d232.kernel_abelian);

    auto dsl = schmidt_decompose(build_spec("SL(2,3)"));
    CHECK(dsl.p == 2);
    CHECK(dsl.q == 3);
    CHECK(dsl.alpha == 3);
    CHECK(dsl.beta == 1);
    CHECK(dsl.r == 2);
    CHECK_FALSE(dsl.kernel_abelian);
    CHECK(dsl.kernel_special);
    CHECK(dsl.frattini_order == 2);
    CHECK(dsl.kernel.count() == 8);

    CHECK_THROWS_AS(schmidt_decompose(build_spec("S4")), Error);
    CHECK_THROWS_AS(schmidt_decompose(build_spec("C6")), Error);
    try {
        schmidt_decompose(build_spec("S4"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_schmidt);
    }
}

TEST_CASE("decision rules for minimal non-nilpotent groups") {
    auto run = [](const char* spec) {
        auto g = build_spec(spec);
        return classify_schmidt(schmidt_decompose(g), g);
    };

    BpsiVerdict a4 = run("Schmidt(2,3)");
    CHECK(a4.verdict == BpsiAnswer::yes);
    CHECK(a4.method == BpsiMethod::schmidt_kernel_abelian);

    // p > q: the kernel alone violates the bound
    BpsiVerdict s3 = run("S3");
    CHECK(s3.verdict == BpsiAnswer::no);
    CHECK(s3.method == BpsiMethod::schmidt_necessity);
    check_witness_integrity(s3);
    CHECK(s3.witness->psi == 7);

    BpsiVerdict g21 = run("Schmidt(7,3)");
    CHECK(g21.verdict == BpsiAnswer::no);
    CHECK(g21.method == BpsiMethod::schmidt_necessity);
    CHECK(g21.witness->order == 7);
    CHECK(g21.witness->psi == 43);

    // beta = 2: the subgroup P.<x^q> violates the bound
    BpsiVerdict g36 = run("Schmidt(2,3,2)");
    CHECK(g36.verdict == BpsiAnswer::no);
    CHECK(g36.method == BpsiMethod::schmidt_necessity);
    check_witness_integrity(g36);
    CHECK(g36.witness->order == 12);
    CHECK(g36.witness->psi == 49);

    // non-abelian kernel, p = 2, ineq_2 fails: stays undecided
    BpsiVerdict sl = run("SL(2,3)");
    CHECK(sl.verdict == BpsiAnswer::unknown);
    CHECK(sl.method == BpsiMethod::schmidt_inconclusive);
    CHECK_FALSE(sl.witness.has_value());

    // every decided verdict is confirmed by brute force
    for (const char* spec :
         {"Schmidt(2,3)", "S3", "Schmidt(7,3)", "Schmidt(2,3,2)",
          "Schmidt(2,5)", "Schmidt(2,7)"}) {
        auto g = build_spec(spec);
        BpsiVerdict v = classify_schmidt(schmidt_decompose(g), g);
        CAPTURE(spec);
        REQUIRE(v.verdict != BpsiAnswer::unknown);
        CHECK(v.verdict == bpsi_bruteforce(g).verdict);
    }
}

TEST_CASE("hereditary boundedness for p-groups") {
    struct Case {
        const char* spec;
        bool want;
    };
    const std::vector<Case> cases = {
        {"E(2,3)", true}, {"E(5,2)", true}, {"Heis3", true}, {"C4", true},
        {"C9", true},     {"C8", false},    {"C27", false},  {"M3(3)", false},
        {"D8", false},    {"Q8", false},    {"Q32", false},  {"C2", true},
    };
    for (const auto& c : cases) {
        CAPTURE(c.spec);
        auto g = build_spec(c.spec);
        CHECK(hereditary_bounded_p_group(g) == c.want);
        CHECK((classify_nilpotent(g).verdict == BpsiAnswer::yes) == c.want);
    }
    CHECK_THROWS_AS(hereditary_bounded_p_group(build_spec("C6")), Error);
    CHECK_THROWS_AS(hereditary_bounded_p_group(build_spec("S3")), Error);
}

TEST_CASE("theorem-only dispatch routes and labels") {
    struct Case {
        const char* spec;
        BpsiAnswer verdict;
        BpsiMethod method;
    };
    const std::vector<Case> cases = {
        {"C9", BpsiAnswer::yes, BpsiMethod::abelian},
        {"C8", BpsiAnswer::no, BpsiMethod::abelian},
        {"Q8", BpsiAnswer::no, BpsiMethod::nilpotent},
        {"Heis3", BpsiAnswer::yes, BpsiMethod::nilpotent},
        {"S3", BpsiAnswer::no, BpsiMethod::normal_hall},
        {"Schmidt(7,3)", BpsiAnswer::no, BpsiMethod::normal_hall},
        {"P(3,7,2)", BpsiAnswer::no, BpsiMethod::normal_hall},
        {"A4", BpsiAnswer::yes, BpsiMethod::schmidt_kernel_abelian},
        {"Schmidt(2,5)", BpsiAnswer::yes, BpsiMethod::schmidt_kernel_abelian},
        {"SL(2,3)", BpsiAnswer::unknown, BpsiMethod::schmidt_inconclusive},
        {"S4", BpsiAnswer::unknown, BpsiMethod::none},
        {"A5", BpsiAnswer::unknown, BpsiMethod::none},
        {"FrobSum(2,3,2)", BpsiAnswer::unknown, BpsiMethod::none},
    };
    for (const auto& c : cases) {
        CAPTURE(c.spec);
        BpsiVerdict v = bpsi_theorems(build_spec(c.spec));
        CHECK(v.verdict == c.verdict);
        CHECK(v.method == c.method);
    }
}

TEST_CASE("auto dispatch always decides and agrees with brute force") {
    for (const auto& [spec, g] : testcorpus::build_corpus(testcorpus::small_specs())) {
        CAPTURE(spec);
        BpsiVerdict v = bpsi_auto(g);
        CHECK(v.verdict != BpsiAnswer::unknown);
        CHECK(v.verdict == bpsi_bruteforce(g).verdict);
        if (v.verdict == BpsiAnswer::no) check_witness_integrity(v);
    }
}

TEST_CASE("verdict and method names") {
    CHECK(std::string(to_string(BpsiAnswer::yes)) == "true");
    CHECK(std::string(to_string(BpsiAnswer::no)) == "false");
    CHECK(std::string(to_string(BpsiAnswer::unknown)) == "unknown");
    CHECK(std::string(to_string(BpsiMethod::brute)) == "brute");
    CHECK(std::string(to_string(BpsiMethod::abelian)) == "abelian");
    CHECK(std::string(to_string(BpsiMethod::nilpotent)) == "nilpotent");
    CHECK(std::string(to_string(BpsiMethod::normal_hall)) == "normal_hall");
    CHECK(std::string(to_string(BpsiMethod::p_group)) == "p_group");
    CHECK(std::string(to_string(BpsiMethod::schmidt_kernel_abelian)) ==
          "schmidt_kernel_abelian");
    CHECK(std::string(to_string(BpsiMethod::schmidt_necessity)) ==
          "schmidt_necessity");
    CHECK(std::string(to_string(BpsiMethod::schmidt_inconclusive)) ==
          "schmidt_inconclusive");
    CHECK(std::string(to_string(BpsiMethod::none)) == "none");
}
