#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "psiforge/algebra.hpp"
#include "psiforge/group.hpp"

namespace psiforge {

enum class PsiMethod { direct, classes, cyclic_subgroups, formula };
const char* to_string(PsiMethod m);

// Sum of element orders, tagged with the method that produced it so
// cross-method disagreement can be reported instead of silently resolved.
// The constructor enforces the floor: identity contributes 1, every other
// element at least 2, so psi >= 2|G| - 1, with psi = |G| only at |G| = 1.
struct PsiValue {
    std::string group_name;
    BigInt psi;
    PsiMethod method;

    PsiValue(std::string name, std::uint64_t order, BigInt value, PsiMethod m);
};

PsiValue psi_direct(const GroupPtr& g);
PsiValue psi_via_classes(const GroupPtr& g);
PsiValue psi_via_cyclic_subgroups(const GroupPtr& g);

// Sum of ambient element orders over a subgroup mask (element order does not
// depend on the ambient group, so this is psi of the subgroup).
std::uint64_t psi_of_mask(const SubgroupMask& mask);

// psi of the cyclic group of order p^n: (p^{2n+1} + 1)/(p + 1), exact.
BigInt psi_cyclic_prime_power(std::uint64_t p, std::uint32_t n);

// psi of the cyclic group of order n: multiplicative over the coprime
// factorization of n.
BigInt psi_cyclic(std::uint64_t n);

// psi of C_p^a: p^{a+1} - p + 1 (one identity, everything else order p).
BigInt psi_elementary_abelian(std::uint64_t p, std::uint32_t a);

// (p^{a+1} - p + 1)(q^b - q + 1) > p^a q^b, evaluated exactly.  The left side
// is psi(C_p^a) * psi(C_q^{b-1}); truth across the whole grid a >= 1, b >= 2
// is what rules out non-cyclic complements in two-prime groups.
bool psi_coprime_product_exceeds(std::uint64_t p, std::uint64_t q, std::uint32_t a, std::uint32_t b);

// The two inequalities deciding psi-boundedness of Schmidt groups with a
// non-abelian kernel of order p^alpha, complement C_q, r = ord of p mod q.
// ineq_1: (p^{alpha-r+1} - p + 1)(q^2 - q + 1) < p^alpha q
//         (psi of the maximal subgroups Phi(P)Q_i stays under |G|)
// ineq_2: psi_p < 2^alpha q (the even-p case also needs the kernel itself
//         to stay under |G|, since exp(P) = 4 there)
bool ineq_1(std::uint64_t p, std::uint64_t q, std::uint32_t r, std::uint32_t alpha);
bool ineq_2(const BigInt& psi_p, std::uint32_t alpha, std::uint64_t q);

// Range of psi over special 2-groups of order 2^alpha whose Frattini subgroup
// has order 2^{alpha-r}: lower 2^{alpha+1} - 1 (exponent-2 floor, excluded),
// upper 1 + 2(2^{alpha-r} - 1) + 4(2^alpha - 2^{alpha-r}) (attained).
std::pair<BigInt, BigInt> special2_bounds(std::uint32_t alpha, std::uint32_t r);

} // namespace psiforge
