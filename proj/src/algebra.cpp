#include "psiforge/algebra.hpp"

#include <numeric>

namespace psiforge {

BigInt big_pow(std::uint64_t base, std::uint32_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0 || n > 1000000000ull)
        fail(Errc::parameter_out_of_range, "factorize: n must be in [1, 10^9], got " + std::to_string(n));
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        std::uint32_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
    require_internal(m > 0 && m <= 0xffffffffull, "pow_mod modulus fits 32 bits");
    std::uint64_t r = 1 % m;
    x %= m;
    while (e) {
        if (e & 1u) r = r * x % m;
        x = x * x % m;
        e >>= 1u;
    }
    return r;
}

std::uint32_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) fail(Errc::parameter_out_of_range, "multiplicative_order: modulus must be >= 2");
    a %= m;
    if (std::gcd(a, m) != 1)
        fail(Errc::not_coprime, "multiplicative_order: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
    // The order divides phi(m); take the minimal divisor d of phi(m) with
    // a^d = 1 by stripping primes from phi(m).
    std::uint64_t order = euler_phi(m);
    for (const auto& pp : factorize(order)) {
        for (std::uint32_t i = 0; i < pp.exponent; ++i) {
            if (pow_mod(a, order / pp.prime, m) == 1)
                order /= pp.prime;
            else
                break;
        }
    }
    return static_cast<std::uint32_t>(order);
}

} // namespace psiforge
