#include "psiforge/group.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "psiforge/algebra.hpp"

namespace psiforge {

using Index = FiniteGroup::Index;

GroupPtr FiniteGroup::create(Index n, MulFn mul, std::vector<Index> generators, LabelFn label,
                             std::string name) {
    require_internal(n >= 1, "group must contain the identity");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->n_ = n;
    g->raw_mul_ = std::move(mul);
    g->generators_ = std::move(generators);
    g->label_ = std::move(label);
    g->name_ = std::move(name);

    if (n <= kCayleyLimit) {
        g->cayley_.resize(std::size_t(n) * n);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                g->cayley_[std::size_t(a) * n + b] = static_cast<std::uint16_t>(g->raw_mul_(a, b));
    }
    require_internal(g->mul(0, 0) == 0, "identity must sit at index 0");

    g->order_.assign(n, 1);
    for (Index x = 1; x < n; ++x) {
        Index y = x;
        std::uint32_t k = 1;
        while (y != 0) {
            y = g->mul(y, x);
            ++k;
            require_internal(k <= n, "element order exceeded group size");
        }
        g->order_[x] = k;
    }
    g->inverse_.resize(n);
    for (Index x = 0; x < n; ++x) g->inverse_[x] = g->power(x, g->order_[x] - 1);
    return g;
}

Index FiniteGroup::power(Index a, std::uint64_t e) const {
    Index r = 0;
    while (e) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1u;
    }
    return r;
}

// --- SubgroupMask ---

SubgroupMask::SubgroupMask(GroupPtr g) : group_(std::move(g)) {
    words_.assign((group_->size() + 63) / 64, 0);
}

SubgroupMask SubgroupMask::full(GroupPtr g) {
    SubgroupMask m(g);
    for (Index i = 0; i < g->size(); ++i) m.set(i);
    return m;
}

SubgroupMask SubgroupMask::of(GroupPtr g, const std::vector<Index>& members) {
    SubgroupMask m(std::move(g));
    for (Index i : members) m.set(i);
    return m;
}

bool SubgroupMask::is_subset_of(const SubgroupMask& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

std::vector<Index> SubgroupMask::members() const {
    std::vector<Index> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(static_cast<Index>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t SubgroupMask::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
}

bool SubgroupMask::canonical_less(const SubgroupMask& a, const SubgroupMask& b) {
    if (a.count_ != b.count_) return a.count_ < b.count_;
    // Bitstring from element 0 upward, '1' before '0': whichever mask holds
    // the lowest differing element comes first.
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a.words_[w] & low) != 0;
        }
    }
    return false;
}

// --- predicates ---

bool is_abelian(const GroupPtr& g) {
    const auto& gens = g->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (g->mul(gens[i], gens[j]) != g->mul(gens[j], gens[i])) return false;
    return true;
}

bool is_cyclic(const GroupPtr& g) {
    for (Index x = 0; x < g->size(); ++x)
        if (g->element_order(x) == g->size()) return true;
    return false;
}

bool is_elementary_abelian(const GroupPtr& g) {
    if (g->size() == 1) return true;
    if (!is_abelian(g)) return false;
    std::uint32_t p = g->element_order(1);
    if (!is_prime(p)) return false;
    for (Index x = 1; x < g->size(); ++x)
        if (g->element_order(x) != p) return false;
    return true;
}

std::uint64_t exponent(const GroupPtr& g) {
    std::uint64_t e = 1;
    for (Index x = 0; x < g->size(); ++x) e = lcm_u64(e, g->element_order(x));
    return e;
}

std::vector<std::uint64_t> pi(const GroupPtr& g) {
    std::vector<std::uint64_t> primes;
    for (const auto& pp : factorize(g->size())) primes.push_back(pp.prime);
    return primes;
}

// --- generation ---

SubgroupMask generated_subgroup(const GroupPtr& g, const std::vector<Index>& seeds) {
    SubgroupMask mask(g);
    mask.set(0);
    std::vector<Index> worklist{0};
    const std::size_t half = g->size() / 2;
    // Right-multiplying by the seeds reaches every product of seed elements;
    // in a finite group that set is already closed under inverses.
    for (std::size_t at = 0; at < worklist.size(); ++at) {
        for (Index s : seeds) {
            Index z = g->mul(worklist[at], s);
            if (!mask.test(z)) {
                mask.set(z);
                worklist.push_back(z);
                // A subgroup order divides |G|; past |G|/2 it must be |G|.
                if (worklist.size() > half) {
                    for (Index e = 0; e < g->size(); ++e) mask.set(e);
                    return mask;
                }
            }
        }
    }
    return mask;
}

std::vector<Index> small_generating_set(const GroupPtr& g, const SubgroupMask& mask) {
    std::vector<Index> gens;
    SubgroupMask have(g);
    have.set(0);
    for (Index m : mask.members()) {
        if (!have.test(m)) {
            gens.push_back(m);
            have = generated_subgroup(g, gens);
        }
    }
    return gens;
}

SubgroupMask normal_closure(const GroupPtr& g, const std::vector<Index>& seeds) {
    std::vector<Index> gens = seeds;
    SubgroupMask h = generated_subgroup(g, gens);
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t known = gens.size();
        for (std::size_t i = 0; i < known; ++i) {
            for (Index c : g->generators()) {
                Index z = g->conjugate(c, gens[i]);
                if (!h.test(z)) {
                    gens.push_back(z);
                    h = generated_subgroup(g, gens);
                    grew = true;
                }
            }
        }
    }
    return h;
}

SubgroupMask center(const GroupPtr& g) {
    SubgroupMask mask(g);
    for (Index z = 0; z < g->size(); ++z) {
        bool central = true;
        for (Index c : g->generators())
            if (g->mul(z, c) != g->mul(c, z)) {
                central = false;
                break;
            }
        if (central) mask.set(z);
    }
    return mask;
}

SubgroupMask derived_subgroup(const GroupPtr& g) {
    std::vector<Index> comms;
    const auto& gens = g->generators();
    for (Index a : gens)
        for (Index b : gens) {
            Index c = g->mul(g->mul(g->inverse(a), g->inverse(b)), g->mul(a, b));
            if (c != 0) comms.push_back(c);
        }
    return normal_closure(g, comms);
}

bool is_solvable(const GroupPtr& g) {
    GroupPtr cur = g;
    while (cur->size() > 1) {
        SubgroupMask d = derived_subgroup(cur);
        if (d.count() == cur->size()) return false; // perfect and non-trivial
        if (d.count() == 1) return true;
        cur = subgroup_as_group(cur, d);
    }
    return true;
}

bool is_subgroup_mask(const GroupPtr& g, const SubgroupMask& mask) {
    if (!mask.test(0)) return false;
    auto mem = mask.members();
    for (Index a : mem)
        for (Index b : mem)
            if (!mask.test(g->mul(a, b))) return false;
    return true;
}

bool is_normal(const GroupPtr& g, const SubgroupMask& mask) {
    for (Index c : g->generators())
        for (Index m : mask.members())
            if (!mask.test(g->conjugate(c, m))) return false;
    return true;
}

// --- Sylow machinery ---

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace

SubgroupMask sylow(const GroupPtr& g, std::uint64_t p) {
    if (!is_prime(p)) fail(Errc::parameter_out_of_range, "sylow: " + std::to_string(p) + " is not prime");
    std::uint64_t n = g->size();
    std::uint64_t target = 1;
    while (n % p == 0) {
        n /= p;
        target *= p;
    }
    if (target == 1)
        fail(Errc::prime_does_not_divide,
             "sylow: " + std::to_string(p) + " does not divide |" + g->name() + "| = " + std::to_string(g->size()));

    Index x0 = 0;
    for (Index x = 1; x < g->size(); ++x)
        if (g->element_order(x) == p) {
            x0 = x;
            break;
        }
    require_internal(x0 != 0, "Cauchy element of order p exists");

    std::vector<Index> gens{x0};
    SubgroupMask mask = generated_subgroup(g, gens);
    while (mask.count() < target) {
        // Any p-element outside the subgroup that normalizes it joins into a
        // strictly larger p-subgroup; one exists while we are under target.
        Index grow = 0;
        bool found = false;
        for (Index y = 1; y < g->size() && !found; ++y) {
            if (mask.test(y) || !is_power_of(g->element_order(y), p)) continue;
            bool normalizes = true;
            for (Index s : gens)
                if (!mask.test(g->conjugate(y, s))) {
                    normalizes = false;
                    break;
                }
            if (normalizes) {
                grow = y;
                found = true;
            }
        }
        require_internal(found, "Sylow normalizer growth step");
        gens.push_back(grow);
        SubgroupMask bigger = generated_subgroup(g, gens);
        require_internal(bigger.count() > mask.count(), "Sylow subgroup strictly grows");
        mask = bigger;
    }
    require_internal(mask.count() == target, "Sylow subgroup has full p-power order");
    return mask;
}

std::uint32_t count_sylow(const GroupPtr& g, std::uint64_t p) {
    SubgroupMask p0 = sylow(g, p);
    std::vector<SubgroupMask> orbit{p0};
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
    seen[p0.hash()].push_back(0);
    for (std::size_t at = 0; at < orbit.size(); ++at) {
        auto mem = orbit[at].members();
        for (Index c : g->generators()) {
            SubgroupMask conj(g);
            for (Index m : mem) conj.set(g->conjugate(c, m));
            auto& bucket = seen[conj.hash()];
            bool known = false;
            for (std::size_t idx : bucket) known = known || orbit[idx] == conj;
            if (!known) {
                bucket.push_back(orbit.size());
                orbit.push_back(conj);
            }
        }
    }
    return static_cast<std::uint32_t>(orbit.size());
}

bool is_nilpotent(const GroupPtr& g) {
    for (std::uint64_t p : pi(g))
        if (!is_normal(g, sylow(g, p))) return false;
    return true;
}

std::vector<std::vector<Index>> conjugacy_classes(const GroupPtr& g) {
    std::vector<std::vector<Index>> classes;
    std::vector<bool> visited(g->size(), false);
    for (Index x = 0; x < g->size(); ++x) {
        if (visited[x]) continue;
        std::vector<Index> orbit{x};
        visited[x] = true;
        for (std::size_t at = 0; at < orbit.size(); ++at) {
            for (Index c : g->generators()) {
                Index z = g->conjugate(c, orbit[at]);
                if (!visited[z]) {
                    visited[z] = true;
                    orbit.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

// --- derived groups ---

GroupPtr quotient(const GroupPtr& g, const SubgroupMask& normal) {
    if (!is_subgroup_mask(g, normal)) fail(Errc::not_closed, "quotient: mask is not a subgroup");
    if (!is_normal(g, normal)) fail(Errc::not_normal, "quotient: subgroup is not normal in " + g->name());

    Index n = g->size();
    auto coset_of = std::make_shared<std::vector<Index>>(n, n);
    auto reps = std::make_shared<std::vector<Index>>();
    auto mem = normal.members();
    for (Index x = 0; x < n; ++x) {
        if ((*coset_of)[x] != n) continue;
        Index c = static_cast<Index>(reps->size());
        reps->push_back(x);
        for (Index m : mem) (*coset_of)[g->mul(x, m)] = c;
    }
    require_internal(reps->size() * std::size_t(normal.count()) == n, "cosets partition the group");

    GroupPtr parent = g;
    auto mul_fn = [parent, coset_of, reps](Index a, Index b) {
        return (*coset_of)[parent->mul((*reps)[a], (*reps)[b])];
    };
    auto label_fn = [parent, reps](Index a) { return "[" + parent->element_label((*reps)[a]) + "]"; };
    std::vector<Index> gen_idx;
    for (Index c : g->generators()) {
        Index i = (*coset_of)[c];
        bool seen = i == 0;
        for (Index j : gen_idx) seen = seen || j == i;
        if (!seen) gen_idx.push_back(i);
    }
    return FiniteGroup::create(static_cast<Index>(reps->size()), mul_fn, gen_idx, label_fn,
                               g->name() + "/N" + std::to_string(normal.count()));
}

GroupPtr subgroup_as_group(const GroupPtr& g, const SubgroupMask& mask) {
    if (!is_subgroup_mask(g, mask)) fail(Errc::not_closed, "subgroup_as_group: mask is not closed");
    auto to_ambient = std::make_shared<std::vector<Index>>(mask.members());
    auto to_local = std::make_shared<std::vector<Index>>(g->size(), 0);
    for (Index i = 0; i < static_cast<Index>(to_ambient->size()); ++i) (*to_local)[(*to_ambient)[i]] = i;

    GroupPtr parent = g;
    auto mul_fn = [parent, to_ambient, to_local](Index a, Index b) {
        return (*to_local)[parent->mul((*to_ambient)[a], (*to_ambient)[b])];
    };
    auto label_fn = [parent, to_ambient](Index a) { return parent->element_label((*to_ambient)[a]); };
    std::vector<Index> gen_idx;
    for (Index a : small_generating_set(g, mask)) gen_idx.push_back((*to_local)[a]);
    return FiniteGroup::create(static_cast<Index>(to_ambient->size()), mul_fn, gen_idx, label_fn,
                               g->name() + ":" + std::to_string(mask.count()));
}

bool check_associativity(const GroupPtr& g, Index exhaustive_limit, std::size_t samples,
                         std::uint64_t seed) {
    Index n = g->size();
    if (n <= exhaustive_limit) {
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index c = 0; c < n; ++c)
                    if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        Index a = pick(rng), b = pick(rng), c = pick(rng);
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) return false;
    }
    return true;
}

} // namespace psiforge
