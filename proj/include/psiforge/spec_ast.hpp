#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psiforge/group.hpp"

namespace psiforge {

// Group-expression DSL:
//   spec := term { "x" term }
//   term := name "(" int { "," int } ")" | name int | "(" spec ")"
// Names (case-sensitive): C E D Q S A Heis M3 P Schmidt FrobSum SL PSL File.
// File takes one double-quoted path instead of integers.  Whitespace is
// insignificant; "C9" and "C 9" and "C(9)" are the same term.  The product
// is left-associative and binary.
//
// Canonical printing: single-argument names are written compactly (C9, D10,
// Heis3) except M3, which keeps parentheses to stay readable; Schmidt drops
// a trailing beta of 1 (the parser normalizes this, so round trips hold);
// product chains print flat, right-nested products keep their parentheses.
struct GroupSpec {
    enum class Kind { C, E, D, Q, S, A, Heis, M3, P, Schmidt, FrobSum, SL, PSL, File, Product };

    Kind kind = Kind::C;
    std::vector<std::uint64_t> args;  // empty for File and Product
    std::string path;                 // File only
    std::vector<GroupSpec> factors;   // Product only, exactly two

    bool operator==(const GroupSpec&) const = default;
};

// Errors: parse_error with the byte offset and the expected token set;
// argument_error for a structurally valid term whose argument count is wrong.
GroupSpec parse_spec(const std::string& text);

std::string print_spec(const GroupSpec& ast);

// Constructs the group, delegating argument validation to the family
// constructors; arguments that do not fit the parameter types are rejected
// with argument_error.
GroupPtr build_group(const GroupSpec& ast);

// parse + print: the canonical key used by the cache and the records.
std::string canonical_spec(const std::string& text);

// parse + build.
GroupPtr build_spec(const std::string& text);

} // namespace psiforge
