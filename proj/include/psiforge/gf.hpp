#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "psiforge/errors.hpp"

namespace psiforge {

// GF(p^k) with a fixed defining polynomial per (p, k); the polynomial table
// is a frozen constant so element indices are reproducible across runs and
// platforms.  Elements are indices 0 .. p^k-1 encoding coefficient vectors
// c0 + c1*p + ... + c_{k-1}*p^{k-1}; index 0 is the zero element, index 1
// the multiplicative identity.
class GaloisField {
  public:
    using Elem = std::uint32_t;

    // p prime, p^k <= 10^4.  Non-prime p or a size over the bound is
    // rejected; every in-range (p, k) has a table entry.
    static std::shared_ptr<const GaloisField> make(std::uint64_t p, std::uint32_t k);

    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t size() const { return q_; }

    // Defining polynomial coefficients c0..ck (monic, ck = 1); for k = 1
    // this is {0, 1}, i.e. the identity map x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inverse(Elem a) const;

    // Multiplicative order; a must be nonzero.
    std::uint32_t element_order(Elem a) const;

    // Smallest element (in index order) of multiplicative order exactly d;
    // requires d | p^k - 1.
    Elem element_of_order(std::uint32_t d) const;

    std::string element_repr(Elem a) const;

  private:
    GaloisField(std::uint64_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

    std::uint64_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    // Small fields get dense add/mul tables; larger ones compute polynomial
    // products on demand (q^2 table entries would not stay cheap at 10^4).
    bool dense_;
    std::vector<Elem> mul_table_;
    std::vector<Elem> add_table_;
    std::vector<Elem> inv_table_;

    Elem mul_slow(Elem a, Elem b) const;
    Elem add_slow(Elem a, Elem b) const;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

// Convenience wrappers matching the rest of the engine's free-function style.
FieldPtr gf_make(std::uint64_t p, std::uint32_t k);
GaloisField::Elem gf_element_of_order(const FieldPtr& f, std::uint32_t d);

} // namespace psiforge
