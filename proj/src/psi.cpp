#include "psiforge/psi.hpp"

#include <unordered_set>

namespace psiforge {

namespace {

using Index = FiniteGroup::Index;

void require_prime(std::uint64_t p, const std::string& who) {
    if (!is_prime(p)) fail(Errc::parameter_out_of_range, who + ": " + std::to_string(p) + " is not prime");
}

} // namespace

const char* to_string(PsiMethod m) {
    switch (m) {
    case PsiMethod::direct: return "direct";
    case PsiMethod::classes: return "classes";
    case PsiMethod::cyclic_subgroups: return "cyclic_subgroups";
    case PsiMethod::formula: return "formula";
    }
    fail(Errc::internal_error, "unhandled PsiMethod");
}

PsiValue::PsiValue(std::string name, std::uint64_t order, BigInt value, PsiMethod m)
    : group_name(std::move(name)), psi(std::move(value)), method(m) {
    require_internal(order >= 1, "psi of a non-empty group");
    require_internal(psi >= BigInt(2) * order - 1, "psi >= 2|G| - 1");
    require_internal((psi == BigInt(order)) == (order == 1), "psi = |G| only for the trivial group");
}

PsiValue psi_direct(const GroupPtr& g) {
    std::uint64_t sum = 0;
    for (std::uint32_t o : g->order_table()) sum += o;
    return PsiValue(g->name(), g->size(), BigInt(sum), PsiMethod::direct);
}

PsiValue psi_via_classes(const GroupPtr& g) {
    BigInt sum = 0;
    for (const auto& cls : conjugacy_classes(g)) sum += BigInt(cls.size()) * g->element_order(cls[0]);
    return PsiValue(g->name(), g->size(), sum, PsiMethod::classes);
}

PsiValue psi_via_cyclic_subgroups(const GroupPtr& g) {
    std::unordered_set<SubgroupMask, SubgroupMaskHash> seen;
    BigInt sum = 0;
    for (Index x = 0; x < g->size(); ++x) {
        SubgroupMask mask(g);
        Index y = 0;
        do {
            mask.set(y);
            y = g->mul(y, x);
        } while (y != 0);
        if (seen.insert(mask).second) {
            std::uint64_t c = mask.count();
            sum += BigInt(euler_phi(c)) * c;
        }
    }
    return PsiValue(g->name(), g->size(), sum, PsiMethod::cyclic_subgroups);
}

std::uint64_t psi_of_mask(const SubgroupMask& mask) {
    const auto& orders = mask.group()->order_table();
    std::uint64_t sum = 0;
    for (Index i : mask.members()) sum += orders[i];
    return sum;
}

BigInt psi_cyclic_prime_power(std::uint64_t p, std::uint32_t n) {
    require_prime(p, "psi_cyclic_prime_power");
    if (n < 1) fail(Errc::parameter_out_of_range, "psi_cyclic_prime_power: exponent must be >= 1");
    BigInt num = big_pow(p, 2 * n + 1) + 1;
    BigInt den = BigInt(p) + 1;
    require_internal(num % den == 0, "(p^{2n+1} + 1) divisible by p + 1");
    return num / den;
}

BigInt psi_cyclic(std::uint64_t n) {
    if (n < 1) fail(Errc::parameter_out_of_range, "psi_cyclic: order must be >= 1");
    BigInt prod = 1;
    for (const PrimePower& pp : factorize(n)) prod *= psi_cyclic_prime_power(pp.prime, pp.exponent);
    return prod;
}

BigInt psi_elementary_abelian(std::uint64_t p, std::uint32_t a) {
    require_prime(p, "psi_elementary_abelian");
    if (a < 1) fail(Errc::parameter_out_of_range, "psi_elementary_abelian: rank must be >= 1");
    return big_pow(p, a + 1) - p + 1;
}

bool psi_coprime_product_exceeds(std::uint64_t p, std::uint64_t q, std::uint32_t a, std::uint32_t b) {
    require_prime(p, "psi_coprime_product_exceeds");
    require_prime(q, "psi_coprime_product_exceeds");
    if (p == q) fail(Errc::parameter_out_of_range, "psi_coprime_product_exceeds: p and q must be distinct");
    if (a < 1 || b < 2)
        fail(Errc::parameter_out_of_range, "psi_coprime_product_exceeds: need a >= 1 and b >= 2");
    BigInt lhs = psi_elementary_abelian(p, a) * psi_elementary_abelian(q, b - 1);
    BigInt rhs = big_pow(p, a) * big_pow(q, b);
    return lhs > rhs;
}

bool ineq_1(std::uint64_t p, std::uint64_t q, std::uint32_t r, std::uint32_t alpha) {
    require_prime(p, "ineq_1");
    require_prime(q, "ineq_1");
    if (r < 1 || r > alpha) fail(Errc::parameter_out_of_range, "ineq_1: need 1 <= r <= alpha");
    BigInt lhs = (big_pow(p, alpha - r + 1) - p + 1) * (BigInt(q) * q - q + 1);
    BigInt rhs = big_pow(p, alpha) * q;
    return lhs < rhs;
}

bool ineq_2(const BigInt& psi_p, std::uint32_t alpha, std::uint64_t q) {
    if (psi_p < 1) fail(Errc::parameter_out_of_range, "ineq_2: psi must be >= 1");
    return psi_p < big_pow(2, alpha) * q;
}

std::pair<BigInt, BigInt> special2_bounds(std::uint32_t alpha, std::uint32_t r) {
    if (r < 1 || r > alpha) fail(Errc::parameter_out_of_range, "special2_bounds: need 1 <= r <= alpha");
    BigInt lower = big_pow(2, alpha + 1) - 1;
    BigInt upper = 1 + 2 * (big_pow(2, alpha - r) - 1) + 4 * (big_pow(2, alpha) - big_pow(2, alpha - r));
    return {lower, upper};
}

} // namespace psiforge
