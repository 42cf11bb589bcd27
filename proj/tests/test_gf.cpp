#include <doctest.h>

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "psiforge/algebra.hpp"
#include "psiforge/errors.hpp"
#include "psiforge/gf.hpp"

using namespace psiforge;

namespace {

// Evaluate the field's defining polynomial at every point of GF(p) and,
// for degree <= 3, conclude irreducibility from the absence of roots.
// For higher degrees, check divisibility by every monic polynomial of
// degree 1 .. deg/2 via plain coefficient arithmetic mod p.
using Poly = std::vector<std::uint32_t>;  // c0 + c1 x + ...

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    // reduce a modulo monic b
    while (a.size() >= b.size()) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t v = a[shift + i] + p * p;
            v -= (lead * b[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>(v % p);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

bool divides(const Poly& d, const Poly& f, std::uint64_t p) {
    return poly_mod(f, d, p).empty();
}

// Enumerate monic polynomials of exact degree deg over GF(p).
void for_each_monic(std::uint64_t p, std::uint32_t deg,
                    const std::function<void(const Poly&)>& fn) {
    Poly c(deg + 1, 0);
    c[deg] = 1;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < deg; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < deg; ++i) {
            c[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        fn(c);
    }
}

bool irreducible_by_trial(const Poly& f, std::uint64_t p) {
    std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        bool found = false;
        for_each_monic(p, d, [&](const Poly& g) {
            if (!found && divides(g, f, p)) found = true;
        });
        if (found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("defining polynomials are monic and irreducible") {
    // every (p, k) with p^k <= 10^4 must be constructible, and its modulus
    // must survive independent trial division over GF(p)
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
        for (std::uint32_t k = 1;; ++k) {
            std::uint64_t q = 1;
            bool fits = true;
            for (std::uint32_t i = 0; i < k; ++i) {
                q *= p;
                if (q > 10000) { fits = false; break; }
            }
            if (!fits) break;
            auto f = gf_make(p, k);
            REQUIRE(f->size() == q);
            const auto& m = f->modulus();
            REQUIRE(m.size() == k + 1);
            CHECK(m.back() == 1);
            if (k > 1) CHECK(irreducible_by_trial(m, p));
        }
    }
}

TEST_CASE("field axioms on small fields") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
        auto f = gf_make(p, k);
        std::uint32_t q = f->size();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->mul(a, 0) == 0);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) {
                CHECK(f->mul(a, f->inverse(a)) == 1);
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                    CHECK(f->mul(a, f->add(b, c)) ==
                          f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 4}, {3, 3}, {5, 2}, {7, 2}, {11, 1}, {13, 2}, {2, 10}}) {
        auto f = gf_make(p, k);
        std::uint32_t q = f->size();
        // order counts: exactly phi(d) elements of order d for each d | q-1
        std::map<std::uint32_t, std::uint64_t> counts;
        for (std::uint32_t a = 1; a < q; ++a) ++counts[f->element_order(a)];
        for (auto [d, c] : counts) {
            CHECK((q - 1) % d == 0);
            CHECK(c == euler_phi(d));
        }
        // element_of_order returns a witness of the exact order
        for (std::uint32_t d = 1; d <= q - 1; ++d) {
            if ((q - 1) % d != 0) continue;
            auto e = f->element_of_order(d);
            CHECK(f->element_order(e) == d);
            // minimality in index order
            for (std::uint32_t a = 1; a < e; ++a)
                CHECK(f->element_order(a) != d);
        }
    }
}

TEST_CASE("element_of_order anchor values") {
    CHECK(gf_element_of_order(gf_make(7, 1), 3) == 2);   // 2^3 = 8 = 1 mod 7
    CHECK(gf_element_of_order(gf_make(7, 1), 6) == 3);   // 3 generates GF(7)*
    CHECK(gf_element_of_order(gf_make(5, 1), 4) == 2);   // 2 generates GF(5)*
    CHECK(gf_element_of_order(gf_make(2, 2), 3) == 2);   // index 2 = the root x
    CHECK(gf_element_of_order(gf_make(3, 1), 2) == 2);   // -1
}

TEST_CASE("pow matches iterated mul") {
    auto f = gf_make(3, 2);
    for (std::uint32_t a = 0; a < f->size(); ++a) {
        std::uint32_t acc = 1;
        for (std::uint64_t e = 0; e <= 20; ++e) {
            CHECK(f->pow(a, e) == acc);
            acc = f->mul(acc, a);
        }
    }
}

TEST_CASE("invalid field parameters are rejected") {
    CHECK_THROWS_AS(gf_make(4, 1), Error);      // 4 not prime
    CHECK_THROWS_AS(gf_make(1, 1), Error);
    CHECK_THROWS_AS(gf_make(2, 14), Error);     // 2^14 > 10^4
    CHECK_THROWS_AS(gf_make(101, 2), Error);    // 101^2 > 10^4
    auto f = gf_make(5, 1);
    CHECK_THROWS_AS(f->inverse(0), Error);
    CHECK_THROWS_AS(f->element_order(0), Error);
    CHECK_THROWS_AS(f->element_of_order(3), Error);  // 3 does not divide 4
}
