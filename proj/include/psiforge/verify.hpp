#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "psiforge/group.hpp"
#include "psiforge/records.hpp"

namespace psiforge {

struct TableRow {
    std::string spec;
    std::uint64_t order = 0;
};

// The catalogue of non-nilpotent psi-bounded groups this tool can construct
// by recipe, in increasing order.  Core covers orders up to 504 and carries
// a < 30 min verification target; extended has no time bound.  Rows whose
// kernels are non-abelian special p-groups (orders 160, 320, 448, 1215,
// 1280) have no recipe here and are reachable only through File(...).
std::vector<TableRow> table_rows_core();
std::vector<TableRow> table_rows_extended();

// Parse, build, decide, and time one spec.  method_flag selects the
// decision procedure: "auto" (theorems, then brute force), "brute", or
// "theorem" (classification only; verdict "unknown" when nothing applies).
VerdictRecord evaluate_spec(const std::string& spec_text,
                            const std::string& method_flag, std::uint64_t budget);

// Every abelian group of order n, one per isomorphism class (multisets of
// prime-power cyclic factors), in a deterministic order.
std::vector<GroupPtr> abelian_groups_of_order(std::uint64_t n);

// Named self-check suites: "formulas" (closed forms and inequalities against
// element-by-element computation), "theorems" (classification routes against
// brute force), "table-core" / "table-extended" (the catalogue rows, brute
// force).  Prints one "ok - ..." / "FAIL - ..." line per check plus "note -"
// context lines; returns true when every check passed.
bool run_verify_suite(const std::string& name, std::ostream& out,
                      std::uint64_t budget);

} // namespace psiforge
