#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "psiforge/group.hpp"

namespace psiforge {

constexpr std::size_t kDefaultLatticeBudget = 2000000;

struct SubgroupLattice {
    GroupPtr group;
    // Every subgroup, including the trivial one and the group itself, in
    // canonical order (size, then bitstring; see SubgroupMask::canonical_less).
    std::vector<SubgroupMask> subgroups;
    bool complete = false;
    std::size_t budget_used = 0;
};

enum class VisitResult { kContinue, kStop };

// Complete subgroup enumeration.  Solvable groups use cyclic extension:
// every subgroup of a solvable group has a normal subgroup of prime index,
// so each known H is extended by elements x of N(H) with x^p in H and the
// join is a union of cosets, never a generic closure.  Non-solvable groups
// fall back to joining every known subgroup with every cyclic seed until
// stable.  Deterministic discovery order; throws budget_exceeded (never
// returns a partial lattice) once more than `budget` subgroups are found.
SubgroupLattice enumerate_subgroups(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

// The seed-and-join path unconditionally, bypassing the cyclic-extension
// fast path.  Reference implementation for cross-checking; same contract.
SubgroupLattice enumerate_subgroups_joins(const GroupPtr& g, std::size_t budget = kDefaultLatticeBudget);

// Same enumeration but hands each newly found subgroup (in discovery order)
// to `visit`; kStop abandons the run and yields nullopt.  Used for searches
// that can conclude before the lattice is complete.
std::optional<SubgroupLattice> enumerate_subgroups_streaming(
    const GroupPtr& g, std::size_t budget, const std::function<VisitResult(const SubgroupMask&)>& visit);

// Proper subgroups not contained in any other proper subgroup, canonical order.
std::vector<SubgroupMask> maximal_subgroups(const SubgroupLattice& lattice);

// Intersection of the maximal subgroups; the trivial subgroup for the
// trivial group (which has no maximal subgroups).
SubgroupMask frattini(const SubgroupLattice& lattice);
SubgroupMask frattini(const GroupPtr& g);

// Direct oracle, independent of enumeration: H is maximal iff it is a proper
// subgroup and adjoining any outside element generates the whole group.
bool verify_maximality(const GroupPtr& g, const SubgroupMask& h);

} // namespace psiforge
