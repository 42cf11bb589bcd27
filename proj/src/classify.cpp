#include "psiforge/classify.hpp"

#include <algorithm>
#include <utility>

namespace psiforge {

namespace {

using Index = FiniteGroup::Index;

std::string witness_hint(const GroupPtr& g, const SubgroupMask& mask) {
    std::string s = "<";
    bool first = true;
    for (Index x : small_generating_set(g, mask)) {
        if (!first) s += ", ";
        first = false;
        s += g->element_label(x);
        if (s.size() > 70) {
            s += ", ...";
            break;
        }
    }
    return s + ">";
}

// `violation` witnesses certify a "no" verdict (psi >= |G|); the others
// certify a brute-force "yes" (the largest psi among proper subgroups).
BpsiWitness checked_witness(const GroupPtr& g, const SubgroupMask& mask, bool violation) {
    require_internal(is_subgroup_mask(g, mask), "witness mask is closed");
    require_internal(mask.count() < g->size(), "witness is proper");
    std::uint64_t ps = psi_of_mask(mask);
    if (violation)
        require_internal(ps >= g->size(), "violation witness has psi >= |G|");
    else
        require_internal(ps < g->size(), "maximal witness has psi < |G|");
    return BpsiWitness{mask, mask.count(), ps, witness_hint(g, mask)};
}

// Greedy: extend <gens> by elements of `pool` (a subgroup mask) while the
// result stays a proper subgroup of pool; the endpoint is maximal in pool.
SubgroupMask extend_to_maximal_within(const GroupPtr& g, std::vector<Index> gens,
                                      const SubgroupMask& pool) {
    SubgroupMask h = generated_subgroup(g, gens);
    require_internal(h.is_subset_of(pool) && h.count() < pool.count(),
                     "maximal extension starts at a proper subgroup of the pool");
    for (Index y : pool.members()) {
        if (h.test(y)) continue;
        gens.push_back(y);
        SubgroupMask cand = generated_subgroup(g, gens);
        if (cand.count() < pool.count())
            h = std::move(cand);
        else
            gens.pop_back();
    }
    return h;
}

// The subgroup certifying a fired normal-Hall criterion: H (the Hall
// subgroup) extended by an index-p1 subgroup K of a Sylow p1-subgroup.
// psi(HK) >= 1 + (|H|-1)p2 + |H|(|K|-1)p1 > |G|, since every non-identity
// element of H has order >= p2 > p1 and the rest of HK have order >= p1.
SubgroupMask hall_witness_mask(const GroupPtr& g) {
    std::uint64_t p1 = pi(g).front();
    SubgroupMask hall(g);
    for (Index i = 0; i < g->size(); ++i)
        if (g->element_order(i) % p1 != 0) hall.set(i);
    SubgroupMask k = extend_to_maximal_within(g, {}, sylow(g, p1));
    std::vector<Index> gens = small_generating_set(g, hall);
    for (Index x : small_generating_set(g, k)) gens.push_back(x);
    return generated_subgroup(g, gens);
}

bool is_prime_power_or_one(std::uint64_t n) { return factorize(n).size() <= 1; }

BpsiVerdict classify_single_prime_core(const GroupPtr& g, BpsiMethod tag) {
    std::uint64_t n = g->size();
    std::uint64_t p = pi(g).front();
    std::uint64_t expo = exponent(g);
    if (n == p * p && is_cyclic(g)) return {g, BpsiAnswer::yes, tag, std::nullopt};
    if (expo == p) return {g, BpsiAnswer::yes, tag, std::nullopt};
    if (is_cyclic(g)) {
        // order p^a with a >= 3 here; psi(<x^p>) = (p^{2a-1}+1)/(p+1) >= p^a
        Index x = 0;
        while (g->element_order(x) != n) ++x;
        SubgroupMask w = generated_subgroup(g, {g->power(x, p)});
        return {g, BpsiAnswer::no, tag, checked_witness(g, w, true)};
    }
    // Non-cyclic with exponent >= p^2: a maximal subgroup through an element
    // of maximal order has psi >= 1 + p^m + (p^{a-1} - 2)p >= |G| + (p-1)^2.
    Index x = 0;
    while (g->element_order(x) != expo) ++x;
    SubgroupMask w = extend_to_maximal_within(g, {x}, SubgroupMask::full(g));
    return {g, BpsiAnswer::no, tag, checked_witness(g, w, true)};
}

BpsiVerdict classify_nilpotent_core(const GroupPtr& g, BpsiMethod tag) {
    if (g->size() == 1) return {g, BpsiAnswer::yes, tag, std::nullopt};
    if (pi(g).size() >= 2) {
        // Sylow subgroups are all normal, so the criterion subgroup exists.
        return {g, BpsiAnswer::no, tag, checked_witness(g, hall_witness_mask(g), true)};
    }
    return classify_single_prime_core(g, tag);
}

struct PShape {
    bool elementary = false;
    SubgroupMask kernel;
    std::uint64_t p = 0, q = 0;
    std::uint64_t multiplier = 0;
};

// Structural recognition: elementary abelian, or a unique elementary abelian
// Sylow p-subgroup of index q (prime, q != p) with some order-q element
// acting on it as h -> h^m, m != 1.  On an elementary abelian group a power
// automorphism is one fixed scalar m, and every other complement element is
// a power of a conjugate of this one, so a single check suffices.
std::optional<PShape> recognize_p_group_P(const GroupPtr& g) {
    if (is_elementary_abelian(g)) {
        PShape s;
        s.elementary = true;
        return s;
    }
    std::vector<std::uint64_t> primes = pi(g);
    if (primes.size() != 2) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        std::uint64_t p = primes[pick], q = primes[1 - pick];
        std::uint64_t n = g->size();
        std::uint64_t kernel_order = n / q;
        if (kernel_order % q == 0) continue; // complement must have order exactly q
        if (count_sylow(g, p) != 1) continue;
        SubgroupMask kernel = sylow(g, p);
        std::vector<Index> members = kernel.members();
        bool elem = true;
        for (Index a : members) elem = elem && g->element_order(a) <= p;
        for (std::size_t i = 0; i < members.size() && elem; ++i)
            for (std::size_t j = i + 1; j < members.size() && elem; ++j)
                elem = g->mul(members[i], members[j]) == g->mul(members[j], members[i]);
        if (!elem) continue;
        Index y = 0;
        while (y < g->size() && g->element_order(y) != q) ++y;
        if (y == g->size()) continue;
        Index h0 = members[1]; // members[0] is the identity
        Index image = g->conjugate(y, h0);
        std::uint64_t m = 0;
        for (std::uint64_t e = 1; e < p; ++e)
            if (g->power(h0, e) == image) {
                m = e;
                break;
            }
        if (m == 0 || m == 1) continue;
        bool universal = true;
        for (Index a : members) universal = universal && g->conjugate(y, a) == g->power(a, m);
        if (!universal) continue;
        PShape s;
        s.kernel = std::move(kernel);
        s.p = p;
        s.q = q;
        s.multiplier = m;
        return s;
    }
    return std::nullopt;
}

SchmidtDecomposition schmidt_decompose_unchecked(const GroupPtr& g, std::size_t budget) {
    std::vector<std::uint64_t> primes = pi(g);
    require_internal(primes.size() == 2, "minimal non-nilpotent group has two prime divisors");
    std::uint64_t p = 0, q = 0;
    bool n0 = count_sylow(g, primes[0]) == 1, n1 = count_sylow(g, primes[1]) == 1;
    require_internal(n0 != n1, "exactly one normal Sylow subgroup");
    p = n0 ? primes[0] : primes[1];
    q = n0 ? primes[1] : primes[0];

    SchmidtDecomposition d;
    d.kernel = sylow(g, p);
    d.p = p;
    d.q = q;
    std::uint64_t n = g->size();
    for (std::uint64_t m = n; m % p == 0; m /= p) ++d.alpha;
    for (std::uint64_t m = n; m % q == 0; m /= q) ++d.beta;
    d.r = multiplicative_order(p % q, q);

    SubgroupMask qsyl = sylow(g, q);
    Index x = 0;
    bool found = false;
    for (Index a : qsyl.members())
        if (g->element_order(a) == qsyl.count()) {
            x = a;
            found = true;
            break;
        }
    require_internal(found, "Sylow complement of a minimal non-nilpotent group is cyclic");
    d.complement_gen = x;
    d.n_q = count_sylow(g, q);

    std::vector<Index> members = d.kernel.members();
    d.kernel_abelian = true;
    for (std::size_t i = 0; i < members.size() && d.kernel_abelian; ++i)
        for (std::size_t j = i + 1; j < members.size() && d.kernel_abelian; ++j)
            d.kernel_abelian = g->mul(members[i], members[j]) == g->mul(members[j], members[i]);

    GroupPtr kg = subgroup_as_group(g, d.kernel);
    SubgroupMask phi = frattini(enumerate_subgroups(kg, budget));
    d.frattini_order = phi.count();
    require_internal(d.kernel.count() == phi.count() * big_pow(p, d.r),
                     "kernel modulo Frattini is the rank-r module of the complement");
    if (d.kernel_abelian)
        require_internal(d.alpha == d.r && d.frattini_order == 1,
                         "abelian kernel is elementary abelian of rank r");

    SubgroupMask zc = center(kg);
    SubgroupMask dc = derived_subgroup(kg);
    bool exp_p = true;
    for (Index a : zc.members()) exp_p = exp_p && kg->element_order(a) <= p;
    d.kernel_special = zc == dc && dc == phi && exp_p && zc.count() > 1;
    return d;
}

} // namespace

const char* to_string(BpsiAnswer a) {
    switch (a) {
    case BpsiAnswer::yes: return "true";
    case BpsiAnswer::no: return "false";
    case BpsiAnswer::unknown: return "unknown";
    }
    fail(Errc::internal_error, "unhandled BpsiAnswer");
}

const char* to_string(BpsiMethod m) {
    switch (m) {
    case BpsiMethod::brute: return "brute";
    case BpsiMethod::abelian: return "abelian";
    case BpsiMethod::nilpotent: return "nilpotent";
    case BpsiMethod::normal_hall: return "normal_hall";
    case BpsiMethod::p_group: return "p_group";
    case BpsiMethod::schmidt_kernel_abelian: return "schmidt_kernel_abelian";
    case BpsiMethod::schmidt_kernel_odd: return "schmidt_kernel_odd";
    case BpsiMethod::schmidt_kernel_even: return "schmidt_kernel_even";
    case BpsiMethod::schmidt_necessity: return "schmidt_necessity";
    case BpsiMethod::schmidt_inconclusive: return "schmidt_inconclusive";
    case BpsiMethod::none: return "none";
    }
    fail(Errc::internal_error, "unhandled BpsiMethod");
}

BpsiVerdict bpsi_bruteforce(const GroupPtr& g, std::size_t budget) {
    std::uint64_t n = g->size();
    std::optional<SubgroupMask> violator;
    std::optional<std::pair<std::uint64_t, SubgroupMask>> best;
    auto lat = enumerate_subgroups_streaming(g, budget, [&](const SubgroupMask& h) {
        if (h.count() == n) return VisitResult::kContinue;
        std::uint64_t ps = psi_of_mask(h);
        if (ps >= n) {
            violator = h;
            return VisitResult::kStop;
        }
        if (!best || ps > best->first ||
            (ps == best->first && SubgroupMask::canonical_less(h, best->second)))
            best = {ps, h};
        return VisitResult::kContinue;
    });
    if (violator) return {g, BpsiAnswer::no, BpsiMethod::brute, checked_witness(g, *violator, true)};
    require_internal(lat.has_value(), "enumeration completed without a stop");
    if (!best) return {g, BpsiAnswer::yes, BpsiMethod::brute, std::nullopt}; // trivial group
    return {g, BpsiAnswer::yes, BpsiMethod::brute, checked_witness(g, best->second, false)};
}

bool normal_hall_criterion(const GroupPtr& g) {
    std::vector<std::uint64_t> primes = pi(g);
    if (primes.size() < 2)
        fail(Errc::not_applicable, "normal_hall_criterion: " + g->name() + " has fewer than two prime divisors");
    std::uint64_t p1 = primes.front();
    std::uint64_t target = g->size();
    while (target % p1 == 0) target /= p1;
    std::vector<Index> members;
    for (Index i = 0; i < g->size(); ++i)
        if (g->element_order(i) % p1 != 0) members.push_back(i);
    if (members.size() != target) return false;
    // A normal Hall subgroup avoiding p1 must be exactly this set; it
    // qualifies iff the set is closed under multiplication.
    SubgroupMask s = SubgroupMask::of(g, members);
    for (Index a : members)
        for (Index b : members)
            if (!s.test(g->mul(a, b))) return false;
    return true;
}

BpsiVerdict classify_abelian(const GroupPtr& g) {
    if (!is_abelian(g)) fail(Errc::not_abelian, g->name() + " is not abelian");
    return classify_nilpotent_core(g, BpsiMethod::abelian);
}

BpsiVerdict classify_nilpotent(const GroupPtr& g) {
    if (!is_nilpotent(g)) fail(Errc::not_nilpotent, g->name() + " is not nilpotent");
    return classify_nilpotent_core(g, BpsiMethod::nilpotent);
}

bool hereditary_bounded_p_group(const GroupPtr& g, std::size_t budget) {
    if (pi(g).size() > 1) fail(Errc::not_p_group, g->name() + " is not a group of prime-power order");
    SubgroupLattice lat = enumerate_subgroups(g, budget);
    // Subgroups are in ascending size order, so candidate proper subgroups
    // of h all appear before it.
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
        const SubgroupMask& h = lat.subgroups[i];
        if (h.count() == 1) continue;
        for (std::size_t j = 0; j < i; ++j) {
            const SubgroupMask& k = lat.subgroups[j];
            if (k.count() >= h.count()) break;
            if (k.is_subset_of(h) && psi_of_mask(k) >= h.count()) return false;
        }
    }
    return true;
}

BpsiVerdict classify_p_group_P(const GroupPtr& g) {
    std::optional<PShape> shape = recognize_p_group_P(g);
    if (!shape)
        fail(Errc::not_p_group,
             g->name() + " is neither elementary abelian nor a power-automorphism extension");
    if (shape->elementary) return {g, BpsiAnswer::yes, BpsiMethod::p_group, std::nullopt};
    // The kernel C_p^{n-1} violates the bound: psi = p^n - p + 1 >= p^{n-1} q
    // because q | p - 1 forces q < p.
    return {g, BpsiAnswer::no, BpsiMethod::p_group, checked_witness(g, shape->kernel, true)};
}

bool is_schmidt(const GroupPtr& g, std::size_t budget) {
    if (is_nilpotent(g)) return false;
    bool found_bad = false;
    enumerate_subgroups_streaming(g, budget, [&](const SubgroupMask& h) {
        if (h.count() == g->size()) return VisitResult::kContinue;
        if (is_prime_power_or_one(h.count())) return VisitResult::kContinue;
        if (!is_nilpotent(subgroup_as_group(g, h))) {
            found_bad = true;
            return VisitResult::kStop;
        }
        return VisitResult::kContinue;
    });
    return !found_bad;
}

SchmidtDecomposition schmidt_decompose(const GroupPtr& g, std::size_t budget) {
    if (!is_schmidt(g, budget))
        fail(Errc::not_schmidt, g->name() + " is not minimal non-nilpotent");
    return schmidt_decompose_unchecked(g, budget);
}

BpsiVerdict classify_schmidt(const SchmidtDecomposition& d, const GroupPtr& g) {
    if (d.beta >= 2 || d.p > d.q) {
        // P.<x^q> (P itself when beta = 1) always reaches psi >= |G| here.
        std::vector<Index> gens = small_generating_set(g, d.kernel);
        Index xq = g->power(d.complement_gen, d.q);
        if (xq != 0) gens.push_back(xq);
        SubgroupMask w = generated_subgroup(g, gens);
        return {g, BpsiAnswer::no, BpsiMethod::schmidt_necessity, checked_witness(g, w, true)};
    }
    if (d.kernel_abelian) return {g, BpsiAnswer::yes, BpsiMethod::schmidt_kernel_abelian, std::nullopt};
    if (d.p % 2 == 1 && ineq_1(d.p, d.q, d.r, d.alpha))
        return {g, BpsiAnswer::yes, BpsiMethod::schmidt_kernel_odd, std::nullopt};
    if (d.p == 2 && ineq_1(2, d.q, d.r, d.alpha) &&
        ineq_2(BigInt(psi_of_mask(d.kernel)), d.alpha, d.q))
        return {g, BpsiAnswer::yes, BpsiMethod::schmidt_kernel_even, std::nullopt};
    return {g, BpsiAnswer::unknown, BpsiMethod::schmidt_inconclusive, std::nullopt};
}

BpsiVerdict bpsi_theorems(const GroupPtr& g, std::size_t budget) {
    if (is_abelian(g)) return classify_abelian(g);
    if (is_nilpotent(g)) return classify_nilpotent(g);
    if (normal_hall_criterion(g))
        return {g, BpsiAnswer::no, BpsiMethod::normal_hall,
                checked_witness(g, hall_witness_mask(g), true)};
    if (recognize_p_group_P(g)) return classify_p_group_P(g);
    if (is_schmidt(g, budget))
        return classify_schmidt(schmidt_decompose_unchecked(g, budget), g);
    return {g, BpsiAnswer::unknown, BpsiMethod::none, std::nullopt};
}

BpsiVerdict bpsi_auto(const GroupPtr& g, std::size_t budget) {
    BpsiVerdict v = bpsi_theorems(g, budget);
    if (v.verdict != BpsiAnswer::unknown) return v;
    return bpsi_bruteforce(g, budget);
}

} // namespace psiforge
