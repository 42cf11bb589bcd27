#pragma once

#include <cstdint>
#include <string>

#include "psiforge/group.hpp"

namespace psiforge {

GroupPtr cyclic(std::uint64_t n);
GroupPtr elementary_abelian(std::uint64_t p, std::uint32_t k);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// Dihedral group of order n (n even, n >= 2): n/2 rotations and n/2 reflections.
GroupPtr dihedral(std::uint64_t n);

// Generalized quaternion group of order n = 2^k, k >= 3.
GroupPtr quaternion(std::uint64_t n);

GroupPtr symmetric(std::uint32_t n);   // n <= 7
GroupPtr alternating(std::uint32_t n); // n <= 7

// Unitriangular 3x3 matrices over Z/p, p odd: order p^3, exponent p.
GroupPtr heisenberg(std::uint64_t p);

// C_{p^2} x| C_p with the generator acting as x -> x^{1+p}; order p^3,
// exponent p^2.  At p = 2 the same formula yields the dihedral group of
// order 8, which is what this constructor returns there.
GroupPtr modular_p3(std::uint64_t p);

// Elementary abelian C_p^{n-1} extended by C_q acting as the smallest
// integer of multiplicative order q mod p (a power automorphism).
// Requires q | p - 1.  With q omitted: elementary_abelian(p, n).
GroupPtr p_group_P(std::uint32_t n, std::uint64_t p);
GroupPtr p_group_P(std::uint32_t n, std::uint64_t p, std::uint64_t q);

// Additive group of GF(p^r), r = ord_q(p), extended by C_{q^beta} acting
// through multiplication by a fixed element of order q.
GroupPtr schmidt_abelian(std::uint64_t p, std::uint64_t q, std::uint32_t beta = 1);

// `copies` copies of GF(p^r) with the order-q scalar acting diagonally.
GroupPtr frobenius_sum(std::uint64_t p, std::uint64_t q, std::uint32_t copies);

// 2x2 matrices of determinant 1 over GF(q), q in {2,3,4,5,7,8,9,11,13},
// generated by [[1,1],[0,1]] and [[0,1],[-1,0]], plus [[1,x],[0,1]] for a
// defining root x when q is not prime.
GroupPtr sl2(std::uint32_t q);
GroupPtr psl2(std::uint32_t q); // sl2 modulo its center

// Permutation group from a generator file (see permutation.hpp for the format).
GroupPtr from_file(const std::string& path);

} // namespace psiforge
