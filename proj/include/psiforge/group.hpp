#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "psiforge/errors.hpp"

namespace psiforge {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group on element indices 0..n-1 with the identity pinned at 0.
// Multiplication delegates to the backing representation (permutations,
// field/pair carriers, cosets) through a type-erased closure; groups of at
// most kCayleyLimit elements additionally get a dense multiplication table,
// built at construction so the object is immutable and safe to share.
class FiniteGroup {
  public:
    using Index = std::uint32_t;

    static constexpr std::size_t kDefaultClosureCap = 20000;
    static constexpr Index kCayleyLimit = 2048;

    using MulFn = std::function<Index(Index, Index)>;
    using LabelFn = std::function<std::string(Index)>;

    static GroupPtr create(Index n, MulFn mul, std::vector<Index> generators, LabelFn label,
                           std::string name);

    Index size() const { return n_; }
    Index identity() const { return 0; }

    Index mul(Index a, Index b) const {
        if (!cayley_.empty()) return cayley_[std::size_t(a) * n_ + b];
        return raw_mul_(a, b);
    }

    Index inverse(Index a) const { return inverse_[a]; }
    Index power(Index a, std::uint64_t e) const;
    Index conjugate(Index g, Index x) const { return mul(mul(g, x), inverse(g)); }

    std::uint32_t element_order(Index a) const { return order_[a]; }
    const std::vector<std::uint32_t>& order_table() const { return order_; }

    const std::vector<Index>& generators() const { return generators_; }
    std::string element_label(Index a) const { return label_ ? label_(a) : std::to_string(a); }
    const std::string& name() const { return name_; }

  private:
    FiniteGroup() = default;

    Index n_ = 0;
    MulFn raw_mul_;
    std::vector<std::uint16_t> cayley_; // n <= kCayleyLimit only; indices fit 16 bits
    std::vector<Index> inverse_;
    std::vector<std::uint32_t> order_;
    std::vector<Index> generators_;
    LabelFn label_;
    std::string name_;
};

// Subset of a group's elements as a bitset, tied to its ambient group.
class SubgroupMask {
  public:
    SubgroupMask() = default;
    explicit SubgroupMask(GroupPtr g);

    static SubgroupMask full(GroupPtr g);
    static SubgroupMask of(GroupPtr g, const std::vector<FiniteGroup::Index>& members);

    const GroupPtr& group() const { return group_; }
    std::uint32_t count() const { return count_; }

    bool test(FiniteGroup::Index i) const { return (words_[i >> 6] >> (i & 63u)) & 1u; }

    void set(FiniteGroup::Index i) {
        std::uint64_t& w = words_[i >> 6];
        std::uint64_t bit = 1ull << (i & 63u);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    bool is_subset_of(const SubgroupMask& other) const;
    bool operator==(const SubgroupMask& other) const { return words_ == other.words_; }

    std::vector<FiniteGroup::Index> members() const; // ascending index order
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::size_t hash() const;

    // Canonical order used everywhere subgroups are listed: by size, then by
    // the bitstring read from element 0 upward ('1' sorts before '0', so the
    // subgroup containing the smaller leading elements comes first).
    static bool canonical_less(const SubgroupMask& a, const SubgroupMask& b);

  private:
    GroupPtr group_;
    std::vector<std::uint64_t> words_;
    std::uint32_t count_ = 0;
};

struct SubgroupMaskHash {
    std::size_t operator()(const SubgroupMask& m) const { return m.hash(); }
};

// Generic closure: breadth-first from the identity, expanding each element by
// the generators in listed order, so element indexing is reproducible.
// Throws closure_cap_exceeded once the element count passes `cap`.
template <class Elem, class Mul, class Label, class Hash = std::hash<Elem>,
          class Eq = std::equal_to<Elem>>
GroupPtr close_over(Elem identity, const std::vector<Elem>& gens, Mul mul_elems, Label label_elem,
                    std::string name, std::size_t cap = FiniteGroup::kDefaultClosureCap) {
    struct Store {
        std::vector<Elem> elems;
        std::unordered_map<Elem, FiniteGroup::Index, Hash, Eq> index;
        Mul mul;

        explicit Store(Mul m) : mul(std::move(m)) {}
    };
    auto store = std::make_shared<Store>(std::move(mul_elems));
    store->elems.push_back(identity);
    store->index.emplace(identity, 0);
    for (std::size_t at = 0; at < store->elems.size(); ++at) {
        for (const Elem& g : gens) {
            Elem z = store->mul(store->elems[at], g);
            if (store->index.emplace(z, static_cast<FiniteGroup::Index>(store->elems.size())).second) {
                if (store->elems.size() >= cap)
                    fail(Errc::closure_cap_exceeded,
                         "closure of " + name + " exceeded the element cap of " + std::to_string(cap));
                store->elems.push_back(z);
            }
        }
    }
    std::vector<FiniteGroup::Index> gen_idx;
    for (const Elem& g : gens) {
        FiniteGroup::Index i = store->index.at(g);
        bool seen = false;
        for (FiniteGroup::Index j : gen_idx) seen = seen || j == i;
        if (!seen && i != 0) gen_idx.push_back(i);
    }
    auto mul_fn = [store](FiniteGroup::Index a, FiniteGroup::Index b) {
        return store->index.at(store->mul(store->elems[a], store->elems[b]));
    };
    auto label_fn = [store, label_elem](FiniteGroup::Index a) { return label_elem(store->elems[a]); };
    return FiniteGroup::create(static_cast<FiniteGroup::Index>(store->elems.size()), mul_fn, gen_idx,
                               label_fn, std::move(name));
}

// --- structural operations ---

bool is_abelian(const GroupPtr& g);
bool is_cyclic(const GroupPtr& g);
// The trivial group counts as elementary abelian here (it is C_p^0 for every
// p); callers that need a definite prime must check size() > 1 themselves.
bool is_elementary_abelian(const GroupPtr& g);

std::uint64_t exponent(const GroupPtr& g);
std::vector<std::uint64_t> pi(const GroupPtr& g); // prime divisors of |G|, ascending

SubgroupMask generated_subgroup(const GroupPtr& g, const std::vector<FiniteGroup::Index>& seeds);
SubgroupMask normal_closure(const GroupPtr& g, const std::vector<FiniteGroup::Index>& seeds);

// Greedy deterministic generating set: scan elements ascending, keep those
// outside the closure of the ones already kept.
std::vector<FiniteGroup::Index> small_generating_set(const GroupPtr& g, const SubgroupMask& mask);

SubgroupMask center(const GroupPtr& g);
SubgroupMask derived_subgroup(const GroupPtr& g);
bool is_solvable(const GroupPtr& g);

bool is_subgroup_mask(const GroupPtr& g, const SubgroupMask& mask);
bool is_normal(const GroupPtr& g, const SubgroupMask& mask);

SubgroupMask sylow(const GroupPtr& g, std::uint64_t p);
std::uint32_t count_sylow(const GroupPtr& g, std::uint64_t p);
bool is_nilpotent(const GroupPtr& g);

// Classes ordered by smallest member; members ascending within a class.
std::vector<std::vector<FiniteGroup::Index>> conjugacy_classes(const GroupPtr& g);

GroupPtr quotient(const GroupPtr& g, const SubgroupMask& normal);
GroupPtr subgroup_as_group(const GroupPtr& g, const SubgroupMask& mask);

// Exhaustive check for n <= exhaustive_limit, otherwise `samples` random
// triples from a fixed-seed generator.
bool check_associativity(const GroupPtr& g, FiniteGroup::Index exhaustive_limit = 512,
                         std::size_t samples = 100000, std::uint64_t seed = 0x5eed);

} // namespace psiforge
