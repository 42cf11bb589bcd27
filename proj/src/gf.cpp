#include "psiforge/gf.hpp"

#include <algorithm>

#include "psiforge/algebra.hpp"

namespace psiforge {

namespace {

struct PolyEntry {
    std::uint32_t p;
    std::uint32_t k;
    std::vector<std::uint32_t> coeffs; // c0..ck, monic
};

// Frozen defining polynomials, one per supported extension field.  Chosen as
// the lexicographically smallest monic irreducible under the base-p encoding
// of the coefficient vector, except for the six historical entries (GF(4),
// GF(8), GF(9), GF(16), GF(25), GF(27)) which keep their documented forms.
// Do not reorder or edit: element indices of every group built over these
// fields depend on them.
const std::vector<PolyEntry>& poly_table() {
    static const std::vector<PolyEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 12, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 1, 0, 0, 0, 0, 1}},
        {3, 7, {2, 0, 1, 0, 0, 0, 0, 1}},
        {3, 8, {2, 0, 1, 0, 0, 0, 0, 0, 1}},
        {5, 2, {1, 1, 1}},
        {5, 3, {1, 1, 0, 1}},
        {5, 4, {2, 0, 0, 0, 1}},
        {5, 5, {1, 4, 0, 0, 0, 1}},
        {7, 2, {1, 0, 1}},
        {7, 3, {2, 0, 0, 1}},
        {7, 4, {1, 1, 0, 0, 1}},
        {11, 2, {1, 0, 1}},
        {11, 3, {4, 1, 0, 1}},
        {13, 2, {2, 0, 1}},
        {13, 3, {2, 0, 0, 1}},
        {17, 2, {3, 0, 1}},
        {17, 3, {3, 1, 0, 1}},
        {19, 2, {1, 0, 1}},
        {19, 3, {2, 0, 0, 1}},
        {23, 2, {1, 0, 1}},
        {29, 2, {2, 0, 1}},
        {31, 2, {1, 0, 1}},
        {37, 2, {2, 0, 1}},
        {41, 2, {3, 0, 1}},
        {43, 2, {1, 0, 1}},
        {47, 2, {1, 0, 1}},
        {53, 2, {2, 0, 1}},
        {59, 2, {1, 0, 1}},
        {61, 2, {2, 0, 1}},
        {67, 2, {1, 0, 1}},
        {71, 2, {1, 0, 1}},
        {73, 2, {5, 0, 1}},
        {79, 2, {1, 0, 1}},
        {83, 2, {1, 0, 1}},
        {89, 2, {3, 0, 1}},
        {97, 2, {5, 0, 1}},
    };
    return table;
}

constexpr std::uint32_t kDenseLimit = 1024;

} // namespace

std::shared_ptr<const GaloisField> GaloisField::make(std::uint64_t p, std::uint32_t k) {
    if (!is_prime(p)) fail(Errc::unsupported_field, "GF(p^k): p = " + std::to_string(p) + " is not prime");
    if (k == 0) fail(Errc::parameter_out_of_range, "GF(p^k): degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > 10000)
            fail(Errc::unsupported_field,
                 "GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds the 10^4 size bound");
    }
    std::vector<std::uint32_t> modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        for (const auto& e : poly_table())
            if (e.p == p && e.k == k) modulus = e.coeffs;
        if (modulus.empty())
            fail(Errc::unsupported_field,
                 "GF(" + std::to_string(p) + "^" + std::to_string(k) + ") has no table entry");
    }
    return std::shared_ptr<const GaloisField>(new GaloisField(p, k, std::move(modulus)));
}

GaloisField::GaloisField(std::uint64_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    q_ = static_cast<std::uint32_t>(q);
    dense_ = q_ <= kDenseLimit;
    if (dense_) {
        add_table_.resize(std::size_t(q_) * q_);
        mul_table_.resize(std::size_t(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) {
                add_table_[std::size_t(a) * q_ + b] = add_slow(a, b);
                mul_table_[std::size_t(a) * q_ + b] = mul_slow(a, b);
            }
    }
    inv_table_.assign(q_, 0);
    for (Elem a = 1; a < q_; ++a) {
        // a^(q-2) = a^-1 in GF(q)*.
        inv_table_[a] = pow(a, q_ - 2);
        require_internal(mul(a, inv_table_[a]) == 1, "field inverse");
    }
}

GaloisField::Elem GaloisField::add_slow(Elem a, Elem b) const {
    Elem r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t ca = a % p_, cb = b % p_;
        a /= static_cast<Elem>(p_);
        b /= static_cast<Elem>(p_);
        r += static_cast<Elem>((ca + cb) % p_ * mult);
        mult *= p_;
    }
    return r;
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
    // Schoolbook product of coefficient vectors, reduced by the monic
    // modulus.  Degrees stay <= 2k-2, coefficients < p^2 <= 10^8: u64 safe.
    std::vector<std::uint64_t> pa(k_), pb(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        pa[i] = a % p_;
        a /= static_cast<Elem>(p_);
        pb[i] = b % p_;
        b /= static_cast<Elem>(p_);
    }
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (!pa[i]) continue;
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
    for (std::uint32_t d = 2 * k_ - 2; d >= k_; --d) {
        std::uint64_t c = prod[d];
        if (c) {
            prod[d] = 0;
            for (std::uint32_t i = 0; i < k_; ++i) {
                std::uint64_t sub = c * modulus_[i] % p_;
                prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub) % p_;
            }
        }
        if (d == k_) break;
    }
    Elem r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += static_cast<Elem>(prod[i] * mult);
        mult *= p_;
    }
    return r;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
    if (dense_) return add_table_[std::size_t(a) * q_ + b];
    return add_slow(a, b);
}

GaloisField::Elem GaloisField::neg(Elem a) const {
    Elem r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t c = a % p_;
        a /= static_cast<Elem>(p_);
        r += static_cast<Elem>((p_ - c) % p_ * mult);
        mult *= p_;
    }
    return r;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
    if (dense_) return mul_table_[std::size_t(a) * q_ + b];
    return mul_slow(a, b);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1u;
    }
    return r;
}

GaloisField::Elem GaloisField::inverse(Elem a) const {
    if (a == 0) fail(Errc::parameter_out_of_range, "field inverse of zero");
    return inv_table_[a];
}

std::uint32_t GaloisField::element_order(Elem a) const {
    if (a == 0) fail(Errc::parameter_out_of_range, "multiplicative order of zero");
    std::uint64_t order = q_ - 1;
    for (const auto& pp : factorize(order)) {
        for (std::uint32_t i = 0; i < pp.exponent; ++i) {
            if (pow(a, order / pp.prime) == 1)
                order /= pp.prime;
            else
                break;
        }
    }
    return static_cast<std::uint32_t>(order);
}

GaloisField::Elem GaloisField::element_of_order(std::uint32_t d) const {
    if (d == 0 || (q_ - 1) % d != 0)
        fail(Errc::no_such_order, "GF(" + std::to_string(q_) + ")* has no element of order " + std::to_string(d));
    for (Elem a = 1; a < q_; ++a)
        if (element_order(a) == d) return a;
    fail(Errc::internal_error, "cyclic multiplicative group missing an order-" + std::to_string(d) + " element");
}

std::string GaloisField::element_repr(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    // Coefficient tuple, low degree first.
    std::string s = "[";
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(a % p_);
        a /= static_cast<Elem>(p_);
    }
    return s + "]";
}

FieldPtr gf_make(std::uint64_t p, std::uint32_t k) { return GaloisField::make(p, k); }

GaloisField::Elem gf_element_of_order(const FieldPtr& f, std::uint32_t d) { return f->element_of_order(d); }

} // namespace psiforge
