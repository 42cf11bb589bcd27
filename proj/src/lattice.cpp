#include "psiforge/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "psiforge/algebra.hpp"

namespace psiforge {

using Index = FiniteGroup::Index;

namespace {

struct Entry {
    SubgroupMask mask;
    std::vector<Index> gens;
};

std::optional<std::vector<Entry>> enumerate_core(
    const GroupPtr& g, std::size_t budget,
    const std::function<VisitResult(const SubgroupMask&)>* visit, bool allow_fast_path) {
    std::vector<Entry> entries;
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen; // hash -> entry ids

    auto add = [&](SubgroupMask&& m, std::vector<Index>&& gens) -> std::optional<bool> {
        auto& bucket = seen[m.hash()];
        for (std::size_t id : bucket)
            if (entries[id].mask == m) return false;
        if (entries.size() >= budget)
            fail(Errc::budget_exceeded, "subgroup enumeration of " + g->name() + " exceeded the budget of " +
                                            std::to_string(budget) + " subgroups");
        bucket.push_back(entries.size());
        entries.push_back(Entry{std::move(m), std::move(gens)});
        if (visit && (*visit)(entries.back().mask) == VisitResult::kStop) return std::nullopt;
        return true;
    };

    // Cyclic seeds, scanning generators in element order.  seed_gen[i] is the
    // first element generating seed i; a seed lies inside a subgroup exactly
    // when that element does.
    std::vector<Index> seed_gen;
    for (Index x = 0; x < g->size(); ++x) {
        SubgroupMask m = generated_subgroup(g, {x});
        auto added = add(std::move(m), {x});
        if (!added) return std::nullopt;
        if (*added) seed_gen.push_back(x);
    }

    if (allow_fast_path && is_solvable(g)) {
        // Cyclic extension: a subgroup of a solvable group always has a
        // normal subgroup of prime index (pull an index-p subgroup back
        // through the derived quotient), so K = <H, x> for a known H with
        // x in N(H) \ H and x^p in H, and the join is the union of the d
        // cosets H, xH, ..., x^{d-1}H.  No generic closures are needed.
        std::vector<Index> members;
        for (std::size_t at = 0; at < entries.size(); ++at) {
            const SubgroupMask h = entries[at].mask; // copy: entries may grow
            if (h.count() == g->size()) continue;
            members = h.members();
            for (Index x = 0; x < g->size(); ++x) {
                if (h.test(x)) continue;
                bool normalizes = true;
                for (Index m : members) {
                    if (!h.test(g->conjugate(x, m))) {
                        normalizes = false;
                        break;
                    }
                }
                if (!normalizes) continue;
                // d = order of the coset xH in N(H)/H: least i with x^i in H.
                std::uint64_t d = 1;
                for (Index y = x; !h.test(y); y = g->mul(y, x)) ++d;
                if (!is_prime(d)) continue;
                SubgroupMask join = h;
                Index xi = x;
                for (std::uint64_t i = 1; i < d; ++i) {
                    for (Index m : members) join.set(g->mul(xi, m));
                    xi = g->mul(xi, x);
                }
                require_internal(join.count() == d * members.size(),
                                 "cyclic extension produces disjoint cosets");
                auto added = add(std::move(join), {});
                if (!added) return std::nullopt;
            }
        }
        return entries;
    }

    // Join fixpoint over (subgroup, cyclic seed) pairs in discovery order.
    for (std::size_t at = 0; at < entries.size(); ++at) {
        for (std::size_t s = 0; s < seed_gen.size(); ++s) {
            Index x = seed_gen[s];
            if (entries[at].mask.test(x)) continue;
            std::vector<Index> gens = entries[at].gens;
            gens.push_back(x);
            SubgroupMask join = generated_subgroup(g, gens);
            auto added = add(std::move(join), std::move(gens));
            if (!added) return std::nullopt;
        }
    }
    return entries;
}

} // namespace

namespace {

std::optional<SubgroupLattice> finish_lattice(const GroupPtr& g,
                                              std::optional<std::vector<Entry>>&& entries) {
    if (!entries) return std::nullopt;
    SubgroupLattice lat;
    lat.group = g;
    lat.budget_used = entries->size();
    lat.subgroups.reserve(entries->size());
    for (auto& e : *entries) lat.subgroups.push_back(std::move(e.mask));
    std::sort(lat.subgroups.begin(), lat.subgroups.end(), SubgroupMask::canonical_less);
    lat.complete = true;
    return lat;
}

} // namespace

std::optional<SubgroupLattice> enumerate_subgroups_streaming(
    const GroupPtr& g, std::size_t budget, const std::function<VisitResult(const SubgroupMask&)>& visit) {
    return finish_lattice(g, enumerate_core(g, budget, &visit, /*allow_fast_path=*/true));
}

SubgroupLattice enumerate_subgroups(const GroupPtr& g, std::size_t budget) {
    auto lat = enumerate_subgroups_streaming(
        g, budget, [](const SubgroupMask&) { return VisitResult::kContinue; });
    require_internal(lat.has_value(), "non-stopping visitor completes");
    return std::move(*lat);
}

SubgroupLattice enumerate_subgroups_joins(const GroupPtr& g, std::size_t budget) {
    auto lat = finish_lattice(g, enumerate_core(g, budget, nullptr, /*allow_fast_path=*/false));
    require_internal(lat.has_value(), "no visitor, enumeration completes");
    return std::move(*lat);
}

std::vector<SubgroupMask> maximal_subgroups(const SubgroupLattice& lattice) {
    const auto n = lattice.group->size();
    std::vector<SubgroupMask> out;
    for (const auto& h : lattice.subgroups) {
        if (h.count() == n) continue;
        bool covered = false;
        for (const auto& k : lattice.subgroups) {
            if (k.count() == n || k.count() <= h.count() || k.count() % h.count() != 0) continue;
            if (h.is_subset_of(k)) {
                covered = true;
                break;
            }
        }
        if (!covered) out.push_back(h);
    }
    return out; // canonical order inherited from the lattice
}

SubgroupMask frattini(const SubgroupLattice& lattice) {
    auto maxes = maximal_subgroups(lattice);
    if (maxes.empty()) {
        SubgroupMask trivial(lattice.group);
        trivial.set(0);
        return trivial;
    }
    SubgroupMask acc = maxes.front();
    for (std::size_t i = 1; i < maxes.size(); ++i) {
        SubgroupMask next(lattice.group);
        for (Index m : acc.members())
            if (maxes[i].test(m)) next.set(m);
        acc = next;
    }
    return acc;
}

SubgroupMask frattini(const GroupPtr& g) { return frattini(enumerate_subgroups(g)); }

bool verify_maximality(const GroupPtr& g, const SubgroupMask& h) {
    if (!is_subgroup_mask(g, h) || h.count() == g->size()) return false;
    std::vector<Index> gens = small_generating_set(g, h);
    gens.push_back(0);
    for (Index x = 0; x < g->size(); ++x) {
        if (h.test(x)) continue;
        gens.back() = x;
        if (generated_subgroup(g, gens).count() != g->size()) return false;
    }
    return true;
}

} // namespace psiforge
