#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "psiforge/group.hpp"
#include "psiforge/lattice.hpp"
#include "psiforge/psi.hpp"

namespace psiforge {

// A group is psi-bounded ("bpsi" throughout the tooling) when every proper
// subgroup H satisfies psi(H) < |G|.  Since psi is strictly monotone under
// inclusion, it is equivalent to check only maximal subgroups, and any single
// proper subgroup with psi >= |G| certifies failure.

enum class BpsiAnswer { yes, no, unknown };
const char* to_string(BpsiAnswer a);

enum class BpsiMethod {
    brute,                  // full lattice enumeration
    abelian,                // abelian classification: C_{p^2} or C_p^n
    nilpotent,              // nilpotent classification: C_{p^2} or exponent p
    normal_hall,            // normal Hall subgroup avoiding the smallest prime
    p_group,                // power-action classification: bounded iff elementary abelian
    schmidt_kernel_abelian, // Schmidt group, abelian kernel: bounded
    schmidt_kernel_odd,     // Schmidt group, non-abelian kernel, p odd, ineq_1
    schmidt_kernel_even,    // Schmidt group, non-abelian kernel, p = 2, ineq_1 + ineq_2
    schmidt_necessity,      // Schmidt group with beta >= 2 or p > q: not bounded
    schmidt_inconclusive,   // Schmidt screen could not decide (sufficiency only)
    none,                   // theorem-only mode: no classification applied
};
const char* to_string(BpsiMethod m);

// Certificate attached to a verdict.  For "no" it is a proper subgroup with
// psi >= |G|; for a brute-force "yes" it is the maximal subgroup attaining
// the largest psi.  Construction re-verifies closure, properness, and the
// psi comparison directly against the group, independent of any lattice.
struct BpsiWitness {
    SubgroupMask mask;
    std::uint32_t order;
    std::uint64_t psi;
    std::string hint; // generating elements, for humans
};

struct BpsiVerdict {
    GroupPtr group;
    BpsiAnswer verdict;
    BpsiMethod method;
    std::optional<BpsiWitness> witness;
};

// Full-lattice decision: streams subgroups, exits with "no" at the first
// proper subgroup whose psi reaches |G|; answers "yes" only after complete
// enumeration, with the argmax-psi maximal subgroup as witness (ties broken
// by canonical mask order).  Throws budget_exceeded with no verdict.
BpsiVerdict bpsi_bruteforce(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

// True when the elements of order coprime to the smallest prime divisor p1
// form a subgroup of order |G| / p1^{v_{p1}}, i.e. G has a normal Hall
// subgroup avoiding p1.  Such a group is never psi-bounded: the Hall subgroup
// extended by an index-p1 subgroup of a Sylow p1-subgroup already has
// psi >= |G|.  Requires at least two prime divisors (not_applicable).
bool normal_hall_criterion(const GroupPtr& g);

// Classification for abelian groups: bounded iff cyclic of order p^2 or
// elementary abelian.  Errors with not_abelian otherwise.
BpsiVerdict classify_abelian(const GroupPtr& g);

// Classification for nilpotent groups: bounded iff cyclic of order p^2 or
// exponent p (single prime).  Errors with not_nilpotent otherwise.
BpsiVerdict classify_nilpotent(const GroupPtr& g);

// Brute-force check that every non-trivial subgroup (including G itself) is
// psi-bounded as a standalone group; G must be a p-group.  For p-groups this
// must agree with classify_nilpotent(G).verdict (exponent-p groups pass the
// property down to all subgroups; everything else already fails at G or at a
// cyclic subgroup of order p^3... p^k).
bool hereditary_bounded_p_group(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

// Power-action groups: elementary abelian, or C_p^{n-1} extended by C_q
// (q | p - 1) acting by a non-trivial power automorphism x -> x^m.
// Recognition is structural, so file-loaded groups are eligible.
// classify_p_group_P: bounded iff elementary abelian; the kernel C_p^{n-1}
// is the witness otherwise (psi = p^n - p + 1 >= p^{n-1} q since q < p).
// Errors with not_p_group when recognition fails.
BpsiVerdict classify_p_group_P(const GroupPtr& g);

// Schmidt group test by definition: non-nilpotent with every proper subgroup
// nilpotent.  Streams the lattice, skipping prime-power subgroup orders, and
// exits at the first non-nilpotent proper subgroup.
bool is_schmidt(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

// Structure of a Schmidt group G = P . <x>: normal Sylow p-subgroup P of
// order p^alpha, cyclic Sylow q-subgroup <x> of order q^beta, r = order of
// p mod q.  The kernel facts recorded: abelian (then alpha = r and P is
// elementary abelian), special (center = derived = Frattini, elementary
// abelian), and the Frattini order (p^{alpha - r}: P/Phi(P) is a faithful
// irreducible module for the complement, of rank r).
struct SchmidtDecomposition {
    SubgroupMask kernel;
    FiniteGroup::Index complement_gen;
    std::uint64_t p = 0, q = 0;
    std::uint32_t alpha = 0, beta = 0, r = 0;
    bool kernel_abelian = false;
    bool kernel_special = false;
    std::uint64_t frattini_order = 1;
    std::uint32_t n_q = 0; // number of Sylow q-subgroups
};

SchmidtDecomposition schmidt_decompose(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

// Decision for a Schmidt group from its decomposition.
//   beta >= 2 or p > q       -> no   (witness P.<x^q>, or P itself at beta = 1)
//   kernel abelian           -> yes
//   p odd, ineq_1            -> yes
//   p = 2, ineq_1 and ineq_2 -> yes
//   otherwise                -> unknown (the sufficient branches are silent;
//                               callers fall back to brute force)
BpsiVerdict classify_schmidt(const SchmidtDecomposition& d, const GroupPtr& g);

// Classification-only dispatch: abelian -> nilpotent -> normal Hall screen
// -> power-action recognition -> Schmidt screen.  Never enumerates the full
// lattice for a verdict (the Schmidt screen still streams subgroups, but
// early-exits on the first non-nilpotent proper one).  Returns unknown with
// method "none" when nothing applies, or "schmidt_inconclusive" when the
// Schmidt branches cannot decide.
BpsiVerdict bpsi_theorems(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

// bpsi_theorems, then brute force on unknown.
BpsiVerdict bpsi_auto(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

} // namespace psiforge
