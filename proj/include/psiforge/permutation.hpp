#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psiforge/group.hpp"

namespace psiforge {

// Permutation on 0-based points as an image vector: p[i] is where i goes.
using Perm = std::vector<std::uint16_t>;

Perm identity_perm(std::uint32_t degree);

// Product convention: (a * b) applies a first, then b, i.e. (a*b)[i] = b[a[i]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& a);

// Disjoint-cycle notation on 1-based points: "(1,2,3)(4,5)"; identity is "()".
std::string cycle_string(const Perm& p);

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint16_t v : p) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

GroupPtr close_permutations(std::uint32_t degree, const std::vector<Perm>& gens, std::string name,
                            std::size_t cap = FiniteGroup::kDefaultClosureCap);

// Generator file: first content line "degree N", then one permutation per
// line in disjoint-cycle notation; '#' starts a comment; blank lines are
// skipped.  Parse failures report 1-based line and column.
struct GeneratorFile {
    std::uint32_t degree;
    std::vector<Perm> generators;
};

GeneratorFile parse_generator_file(const std::string& text);
GeneratorFile load_generator_file(const std::string& path);

} // namespace psiforge
