#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "psiforge/errors.hpp"
#include "psiforge/families.hpp"
#include "psiforge/group.hpp"
#include "psiforge/permutation.hpp"

using namespace psiforge;
using Index = FiniteGroup::Index;

namespace {

std::string data_path(const std::string& name) {
    return std::string(PSIFORGE_DATA_DIR) + "/" + name;
}

std::uint32_t order_by_iteration(const GroupPtr& g, Index a) {
    std::uint32_t k = 1;
    Index x = a;
    while (x != g->identity()) {
        x = g->mul(x, a);
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("group axioms hold across the corpus") {
    for (const auto& [spec, g] : testcorpus::build_corpus(testcorpus::small_specs())) {
        CAPTURE(spec);
        CHECK(check_associativity(g));
        for (Index a = 0; a < g->size(); ++a) {
            CHECK(g->mul(0, a) == a);
            CHECK(g->mul(a, 0) == a);
            CHECK(g->mul(a, g->inverse(a)) == 0);
            CHECK(g->mul(g->inverse(a), a) == 0);
        }
    }
}

TEST_CASE("element orders match direct iteration") {
    for (const char* spec : {"S4", "Q16", "Heis3", "C100", "SL(2,3)", "D20"}) {
        auto g = build_spec(spec);
        CAPTURE(spec);
        for (Index a = 0; a < g->size(); ++a) {
            CHECK(g->element_order(a) == order_by_iteration(g, a));
            CHECK(g->size() % g->element_order(a) == 0);
        }
    }
}

TEST_CASE("power uses the group operation") {
    auto g = build_spec("D24");
    for (Index a = 0; a < g->size(); ++a) {
        Index acc = 0;
        for (std::uint64_t e = 0; e <= 30; ++e) {
            CHECK(g->power(a, e) == acc);
            acc = g->mul(acc, a);
        }
        // exponents far past the element order reduce mod the order
        CHECK(g->power(a, 1000000007ull) ==
              g->power(a, 1000000007ull % g->element_order(a)));
    }
}

TEST_CASE("abelian, cyclic, elementary abelian predicates") {
    CHECK(is_abelian(build_spec("C12")));
    CHECK(is_abelian(build_spec("C2 x C4")));
    CHECK_FALSE(is_abelian(build_spec("S3")));
    CHECK_FALSE(is_abelian(build_spec("Q8")));

    CHECK(is_cyclic(build_spec("C12")));
    CHECK(is_cyclic(build_spec("C6 x C5")));  // coprime orders
    CHECK_FALSE(is_cyclic(build_spec("C2 x C4")));
    CHECK_FALSE(is_cyclic(build_spec("E(3,2)")));

    CHECK(is_elementary_abelian(build_spec("E(2,3)")));
    CHECK(is_elementary_abelian(build_spec("C7")));
    CHECK(is_elementary_abelian(build_spec("C1")));
    CHECK_FALSE(is_elementary_abelian(build_spec("C4")));
    CHECK_FALSE(is_elementary_abelian(build_spec("C6")));
}

TEST_CASE("exponent and prime support") {
    CHECK(exponent(build_spec("S4")) == 12);
    CHECK(exponent(build_spec("Q8")) == 4);
    CHECK(exponent(build_spec("Heis3")) == 3);
    CHECK(exponent(build_spec("M3(3)")) == 9);
    CHECK(exponent(build_spec("A5")) == 30);
    CHECK(exponent(build_spec("C1")) == 1);

    CHECK(pi(build_spec("S4")) == std::vector<std::uint64_t>{2, 3});
    CHECK(pi(build_spec("A5")) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(pi(build_spec("C1")).empty());
    CHECK(pi(build_spec("C100")) == std::vector<std::uint64_t>{2, 5});
}

TEST_CASE("generated subgroups are closed and satisfy Lagrange") {
    for (const char* spec : {"S4", "A5", "D24", "Q16", "Heis3", "C36"}) {
        auto g = build_spec(spec);
        CAPTURE(spec);
        for (Index a = 0; a < g->size(); ++a) {
            for (Index b : {Index(0), Index(a / 2), Index(g->size() - 1)}) {
                auto h = generated_subgroup(g, {a, b});
                CHECK(is_subgroup_mask(g, h));
                CHECK(g->size() % h.count() == 0);
                CHECK(h.test(a));
                CHECK(h.test(b));
            }
        }
        auto whole = generated_subgroup(g, g->generators());
        CHECK(whole.count() == g->size());
    }
}

TEST_CASE("normal closure") {
    auto s4 = build_spec("S4");
    // a transposition normally generates all of S4
    Index transposition = 0;
    Index double_transposition = 0;
    for (Index a = 0; a < s4->size(); ++a) {
        if (s4->element_order(a) != 2) continue;
        auto h = normal_closure(s4, {a});
        if (h.count() == 4)
            double_transposition = a;
        else
            transposition = a;
    }
    CHECK(normal_closure(s4, {transposition}).count() == 24);
    CHECK(normal_closure(s4, {double_transposition}).count() == 4);

    auto a5 = build_spec("A5");
    for (Index a = 1; a < a5->size(); a += 7)
        CHECK(normal_closure(a5, {a}).count() == 60);
}

TEST_CASE("center anchors") {
    CHECK(center(build_spec("S3")).count() == 1);
    CHECK(center(build_spec("S4")).count() == 1);
    CHECK(center(build_spec("A5")).count() == 1);
    CHECK(center(build_spec("D8")).count() == 2);
    CHECK(center(build_spec("D12")).count() == 2);
    CHECK(center(build_spec("D10")).count() == 1);
    CHECK(center(build_spec("Q8")).count() == 2);
    CHECK(center(build_spec("Heis3")).count() == 3);
    CHECK(center(build_spec("SL(2,3)")).count() == 2);
    CHECK(center(build_spec("C24")).count() == 24);
    auto g = build_spec("D8 x C3");
    CHECK(center(g).count() == 6);
    CHECK(is_normal(g, center(g)));
}

TEST_CASE("derived subgroup anchors") {
    CHECK(derived_subgroup(build_spec("C36")).count() == 1);
    CHECK(derived_subgroup(build_spec("S3")).count() == 3);
    CHECK(derived_subgroup(build_spec("S4")).count() == 12);
    CHECK(derived_subgroup(build_spec("A4")).count() == 4);
    CHECK(derived_subgroup(build_spec("D8")).count() == 2);
    CHECK(derived_subgroup(build_spec("Q8")).count() == 2);
    CHECK(derived_subgroup(build_spec("A5")).count() == 60);  // perfect
    CHECK(derived_subgroup(build_spec("SL(2,5)")).count() == 120);
    auto s4 = build_spec("S4");
    CHECK(is_normal(s4, derived_subgroup(s4)));
}

TEST_CASE("solvability") {
    for (const char* spec :
         {"S4", "C30", "D200", "Q64", "Heis5", "Schmidt(2,3)", "SL(2,3)",
          "FrobSum(2,3,2)", "P(3,7,2)", "S3 x S3"})
        CHECK(is_solvable(build_spec(spec)));
    for (const char* spec : {"A5", "S5", "SL(2,5)", "PSL(2,7)", "A5 x C2"})
        CHECK_FALSE(is_solvable(build_spec(spec)));
}

TEST_CASE("Sylow subgroups") {
    auto s4 = build_spec("S4");
    CHECK(sylow(s4, 2).count() == 8);
    CHECK(sylow(s4, 3).count() == 3);
    CHECK(count_sylow(s4, 2) == 3);
    CHECK(count_sylow(s4, 3) == 4);
    CHECK_THROWS_AS(sylow(s4, 5), Error);

    auto a5 = build_spec("A5");
    CHECK(sylow(a5, 2).count() == 4);
    CHECK(count_sylow(a5, 2) == 5);
    CHECK(count_sylow(a5, 3) == 10);
    CHECK(count_sylow(a5, 5) == 6);

    auto c12 = build_spec("C12");
    CHECK(sylow(c12, 2).count() == 4);
    CHECK(count_sylow(c12, 2) == 1);

    // Sylow counts are 1 mod p and divide the group order
    for (const char* spec : {"S4", "A5", "D24", "Schmidt(2,3,2)", "SL(2,3)"}) {
        auto g = build_spec(spec);
        CAPTURE(spec);
        for (std::uint64_t p : pi(g)) {
            std::uint32_t n_p = count_sylow(g, p);
            CHECK(n_p % p == 1);
            CHECK(g->size() % n_p == 0);
            CHECK(is_subgroup_mask(g, sylow(g, p)));
        }
    }
}

TEST_CASE("nilpotency") {
    for (const char* spec :
         {"C30", "Q64", "D32", "Heis5", "M3(3)", "C4 x C9", "Q8 x C3", "C1"})
        CHECK(is_nilpotent(build_spec(spec)));
    for (const char* spec :
         {"S3", "A4", "D10", "D12", "Schmidt(7,3)", "SL(2,3)", "S3 x C2"})
        CHECK_FALSE(is_nilpotent(build_spec(spec)));
}

TEST_CASE("conjugacy classes") {
    auto s4 = build_spec("S4");
    auto classes = conjugacy_classes(s4);
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});

    auto a5 = build_spec("A5");
    auto classes5 = conjugacy_classes(a5);
    std::vector<std::size_t> sizes5;
    for (const auto& c : classes5) sizes5.push_back(c.size());
    std::sort(sizes5.begin(), sizes5.end());
    CHECK(sizes5 == std::vector<std::size_t>{1, 12, 12, 15, 20});

    for (const char* spec : {"S4", "A5", "Q16", "Schmidt(2,3)", "C18"}) {
        auto g = build_spec(spec);
        CAPTURE(spec);
        auto cls = conjugacy_classes(g);
        std::size_t total = 0;
        for (const auto& c : cls) {
            total += c.size();
            for (Index m : c) CHECK(g->element_order(m) == g->element_order(c[0]));
            CHECK(std::is_sorted(c.begin(), c.end()));
        }
        CHECK(total == g->size());
        // abelian iff every class is a singleton
        CHECK((cls.size() == g->size()) == is_abelian(g));
    }
}

TEST_CASE("quotient groups") {
    auto s4 = build_spec("S4");
    SubgroupMask v4(s4);
    for (Index a = 0; a < s4->size(); ++a)
        if (s4->element_order(a) == 1 || normal_closure(s4, {a}).count() == 4) v4.set(a);
    REQUIRE(v4.count() == 4);
    auto q = quotient(s4, v4);
    CHECK(q->size() == 6);
    CHECK_FALSE(is_abelian(q));  // S4 / V4 is the symmetric group on 3 points

    auto q8 = build_spec("Q8");
    auto qz = quotient(q8, center(q8));
    CHECK(qz->size() == 4);
    CHECK(exponent(qz) == 2);  // quaternion mod center is the Klein group

    // quotient by a non-normal subgroup is rejected
    auto s3 = build_spec("S3");
    Index refl = 1;
    while (s3->element_order(refl) != 2) ++refl;
    CHECK_THROWS_AS(quotient(s3, generated_subgroup(s3, {refl})), Error);
}

TEST_CASE("subgroup_as_group carries the induced operation") {
    auto a5 = build_spec("A5");
    // the subgroup generated by a 5-cycle and a suitable involution has
    // order 10 and is non-abelian (dihedral)
    Index five = 1;
    while (a5->element_order(five) != 5) ++five;
    for (Index a = 0; a < a5->size(); ++a) {
        if (a5->element_order(a) != 2) continue;
        auto h = generated_subgroup(a5, {five, a});
        if (h.count() == 10) {
            auto hg = subgroup_as_group(a5, h);
            CHECK(hg->size() == 10);
            CHECK_FALSE(is_abelian(hg));
            CHECK(exponent(hg) == 10);
            CHECK(check_associativity(hg));
            break;
        }
    }
    // non-closed masks are rejected
    SubgroupMask bad(a5);
    bad.set(0);
    bad.set(five);
    CHECK_THROWS_AS(subgroup_as_group(a5, bad), Error);
}

TEST_CASE("small_generating_set regenerates the subgroup") {
    for (const char* spec : {"S4", "D24", "Q16", "E(2,4)", "C36"}) {
        auto g = build_spec(spec);
        CAPTURE(spec);
        auto whole = SubgroupMask::full(g);
        auto gens = small_generating_set(g, whole);
        CHECK(generated_subgroup(g, gens).count() == g->size());
        auto z = center(g);
        auto zgens = small_generating_set(g, z);
        CHECK(generated_subgroup(g, zgens) == z);
    }
}

TEST_CASE("generator files build the expected groups") {
    auto s3 = from_file(data_path("s3.gens"));
    CHECK(s3->size() == 6);
    CHECK_FALSE(is_abelian(s3));
    CHECK(s3->element_label(0) == "()");

    auto a4 = from_file(data_path("a4.gens"));
    CHECK(a4->size() == 12);
    CHECK(derived_subgroup(a4).count() == 4);

    auto a5 = from_file(data_path("a5.gens"));
    CHECK(a5->size() == 60);
    CHECK(derived_subgroup(a5).count() == 60);
    CHECK_FALSE(is_solvable(a5));
}

TEST_CASE("generator file parse errors carry line and column") {
    try {
        from_file(data_path("malformed.gens"));
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse_error);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("repeated") != std::string::npos);
    }

    CHECK_THROWS_AS(from_file(data_path("does_not_exist.gens")), Error);

    auto expect_code = [](const std::string& text, Errc code) {
        try {
            parse_generator_file(text);
            FAIL("expected an error for: " << text);
        } catch (const Error& e) {
            CHECK(e.code() == code);
        }
    };
    expect_code("", Errc::parse_error);                     // no header
    expect_code("(1,2)\n", Errc::parse_error);              // perm before header
    expect_code("degree 0\n", Errc::parse_error);
    expect_code("degree 70000\n", Errc::parse_error);
    expect_code("degree 3\n(1,4)\n", Errc::parse_error);    // point out of range
    expect_code("degree 3\n(1,2\n", Errc::parse_error);     // unterminated
    expect_code("degree 3\n(1,2,)\n", Errc::parse_error);   // trailing comma
    expect_code("degree 3\n(1 2)\n", Errc::parse_error);    // missing comma

    // well-formed edge cases
    auto id = parse_generator_file("degree 4\n()\n");
    CHECK(id.generators.size() == 1);
    CHECK(id.generators[0] == identity_perm(4));
    auto spaced = parse_generator_file("# c\n\ndegree 5\n ( 1 , 2 ) (3,4) # t\n");
    CHECK(spaced.generators.size() == 1);
    CHECK(cycle_string(spaced.generators[0]) == "(1,2)(3,4)");
}

TEST_CASE("permutation composition convention") {
    // (a * b) applies a first; track the image of point 0 explicitly
    Perm a = {1, 0, 2};  // swaps 0,1
    Perm b = {0, 2, 1};  // swaps 1,2
    Perm ab = compose(a, b);
    CHECK(ab[0] == 2);
    CHECK(compose(a, inverse_perm(a)) == identity_perm(3));
    // 0 -> 2 -> 1 -> 0, written 1-based from its smallest point
    CHECK(cycle_string(ab) == "(1,3,2)");
    CHECK(cycle_string(identity_perm(3)) == "()");
}

TEST_CASE("closure cap is enforced") {
    auto gens = parse_generator_file("degree 5\n(1,2)(3,4)\n(1,2,3,4,5)\n");
    CHECK_THROWS_AS(close_permutations(5, gens.generators, "capped", 30), Error);
    try {
        close_permutations(5, gens.generators, "capped", 30);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::closure_cap_exceeded);
        CHECK(e.exit_code() == 3);
    }
}
