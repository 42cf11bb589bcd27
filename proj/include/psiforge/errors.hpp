#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psiforge {

// Error kinds map onto CLI exit codes: usage errors (bad input, bad
// parameters) exit 2, resource limits exit 3, broken internal invariants
// exit 4.  Everything a caller can provoke from the outside must land in
// the first two buckets.
enum class Errc {
    not_coprime,
    unsupported_field,
    no_such_order,
    closure_cap_exceeded,
    prime_does_not_divide,
    not_normal,
    not_closed,
    parameter_out_of_range,
    bad_power_automorphism,
    parse_error,
    budget_exceeded,
    not_abelian,
    not_nilpotent,
    not_p_group,
    not_schmidt,
    not_applicable,
    cache_corrupt,
    argument_error,
    internal_error,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

    // 2 = usage, 3 = limit, 4 = invariant violation.
    int exit_code() const {
        switch (code_) {
        case Errc::closure_cap_exceeded:
        case Errc::budget_exceeded:
            return 3;
        case Errc::internal_error:
            return 4;
        default:
            return 2;
        }
    }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Hard internal check; unlike assert() it stays on in release builds.
inline void require_internal(bool ok, const std::string& what) {
    if (!ok) fail(Errc::internal_error, "internal invariant violated: " + what);
}

} // namespace psiforge
