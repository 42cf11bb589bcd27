#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "psiforge/errors.hpp"

namespace psiforge {

// Exact integers for formula and inequality evaluation.  Group-theoretic
// sums at engine scale fit in 64 bits, but the closed-form checks are
// evaluated on parameter grids whose values do not.
using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(std::uint64_t base, std::uint32_t exp);

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    bool operator==(const PrimePower&) const = default;
};

// Ascending prime order; empty for n = 1.  Trial division, n <= 10^9.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Order of a in (Z/m)*; requires gcd(a, m) = 1.
std::uint32_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// x^e mod m without overflow for m < 2^32.
std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m);

} // namespace psiforge
