#include "psiforge/families.hpp"

#include <array>

#include "psiforge/algebra.hpp"
#include "psiforge/gf.hpp"
#include "psiforge/permutation.hpp"

namespace psiforge {

namespace {

using Index = FiniteGroup::Index;

void require_prime(std::uint64_t p, const std::string& who) {
    if (!is_prime(p)) fail(Errc::parameter_out_of_range, who + ": " + std::to_string(p) + " is not prime");
}

// Element count bound shared by all constructors; closures past this would
// fail anyway, checking up front gives a clean message before any work.
std::uint64_t checked_size(std::uint64_t n, const std::string& who) {
    if (n == 0 || n > FiniteGroup::kDefaultClosureCap)
        fail(Errc::closure_cap_exceeded, who + ": group of order " + std::to_string(n) +
                                             " exceeds the element cap of " +
                                             std::to_string(FiniteGroup::kDefaultClosureCap));
    return n;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, const std::string& who) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > FiniteGroup::kDefaultClosureCap * 2ull)
            fail(Errc::closure_cap_exceeded, who + ": order overflows the element cap");
        r *= base;
    }
    return r;
}

struct U64Hash {
    std::size_t operator()(std::uint64_t v) const {
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdull;
        v ^= v >> 33;
        return static_cast<std::size_t>(v);
    }
};

template <class Mul, class Label>
GroupPtr close_codes(std::uint64_t identity, const std::vector<std::uint64_t>& gens, Mul mul, Label label,
                     std::string name) {
    return close_over<std::uint64_t, Mul, Label, U64Hash>(identity, gens, std::move(mul), std::move(label),
                                                          std::move(name));
}

} // namespace

GroupPtr cyclic(std::uint64_t n) {
    checked_size(n, "cyclic");
    auto mul = [n](std::uint64_t a, std::uint64_t b) { return (a + b) % n; };
    auto label = [](std::uint64_t a) { return std::to_string(a); };
    std::vector<std::uint64_t> gens;
    if (n > 1) gens.push_back(1);
    return close_codes(0, gens, mul, label, "C" + std::to_string(n));
}

GroupPtr elementary_abelian(std::uint64_t p, std::uint32_t k) {
    require_prime(p, "elementary_abelian");
    if (k < 1) fail(Errc::parameter_out_of_range, "elementary_abelian: rank must be >= 1");
    std::string name = "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
    checked_size(checked_pow(p, k, name), name);
    auto mul = [p, k](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 0, mult = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            r += (a % p + b % p) % p * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        return r;
    };
    auto label = [p, k](std::uint64_t a) {
        std::string s = "(";
        for (std::uint32_t i = 0; i < k; ++i) {
            if (i) s += ",";
            s += std::to_string(a % p);
            a /= p;
        }
        return s + ")";
    };
    std::vector<std::uint64_t> gens;
    std::uint64_t unit = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        gens.push_back(unit);
        unit *= p;
    }
    return close_codes(0, gens, mul, label, name);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    std::string name = a->name() + " x " + b->name();
    checked_size(std::uint64_t(a->size()) * b->size(), name);
    std::uint64_t nb = b->size();
    GroupPtr ga = a, gb = b;
    auto mul = [ga, gb, nb](std::uint64_t x, std::uint64_t y) {
        Index xa = static_cast<Index>(x / nb), xb = static_cast<Index>(x % nb);
        Index ya = static_cast<Index>(y / nb), yb = static_cast<Index>(y % nb);
        return std::uint64_t(ga->mul(xa, ya)) * nb + gb->mul(xb, yb);
    };
    auto label = [ga, gb, nb](std::uint64_t x) {
        return "(" + ga->element_label(static_cast<Index>(x / nb)) + "," +
               gb->element_label(static_cast<Index>(x % nb)) + ")";
    };
    std::vector<std::uint64_t> gens;
    for (Index g : a->generators()) gens.push_back(std::uint64_t(g) * nb);
    for (Index g : b->generators()) gens.push_back(g);
    return close_codes(0, gens, mul, label, name);
}

GroupPtr dihedral(std::uint64_t n) {
    if (n < 2 || n % 2 != 0)
        fail(Errc::parameter_out_of_range, "dihedral: order must be even and >= 2, got " + std::to_string(n));
    checked_size(n, "dihedral");
    std::uint64_t m = n / 2;
    // code = t + m*f for the element r^t s^f.
    auto mul = [m](std::uint64_t x, std::uint64_t y) {
        std::uint64_t t1 = x % m, f1 = x / m, t2 = y % m, f2 = y / m;
        std::uint64_t t = f1 ? (t1 + m - t2) % m : (t1 + t2) % m;
        return t + m * (f1 ^ f2);
    };
    auto label = [m](std::uint64_t x) {
        std::uint64_t t = x % m, f = x / m;
        std::string s = t ? "r^" + std::to_string(t) : (f ? "" : "e");
        if (f) s += "s";
        return s;
    };
    std::vector<std::uint64_t> gens;
    if (m > 1) gens.push_back(1);
    gens.push_back(m);
    return close_codes(0, gens, mul, label, "D" + std::to_string(n));
}

GroupPtr quaternion(std::uint64_t n) {
    std::uint64_t m = n / 2;
    if (n < 8 || (n & (n - 1)) != 0)
        fail(Errc::parameter_out_of_range,
             "quaternion: order must be a power of two >= 8, got " + std::to_string(n));
    checked_size(n, "quaternion");
    // code = i + m*j for a^i b^j; b^2 = a^{m/2}, b a b^-1 = a^-1.
    auto mul = [m](std::uint64_t x, std::uint64_t y) {
        std::uint64_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
        std::uint64_t i = (i1 + (j1 ? m - i2 : i2) + ((j1 & j2) ? m / 2 : 0)) % m;
        return i + m * (j1 ^ j2);
    };
    auto label = [m](std::uint64_t x) {
        std::uint64_t i = x % m, j = x / m;
        std::string s = i ? "a^" + std::to_string(i) : (j ? "" : "e");
        if (j) s += "b";
        return s;
    };
    return close_codes(0, {1, m}, mul, label, "Q" + std::to_string(n));
}

namespace {

GroupPtr permutation_family(std::uint32_t n, bool alternating_part) {
    std::string name = (alternating_part ? "A" : "S") + std::to_string(n);
    if (n < 1 || n > 7)
        fail(Errc::parameter_out_of_range, name + ": degree must be between 1 and 7");
    std::vector<Perm> gens;
    if (!alternating_part && n >= 2) {
        Perm t = identity_perm(n);
        std::swap(t[0], t[1]);
        gens.push_back(t);
        Perm c(n);
        for (std::uint32_t i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
        gens.push_back(c);
    } else if (alternating_part && n >= 3) {
        Perm three = identity_perm(n);
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        gens.push_back(three);
        if (n > 3) {
            Perm c = identity_perm(n);
            if (n % 2 == 1) {
                for (std::uint32_t i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
            } else {
                // cycle on points 2..n keeps the parity even
                for (std::uint32_t i = 1; i < n; ++i) c[i] = static_cast<std::uint16_t>(i % (n - 1) + 1);
            }
            gens.push_back(c);
        }
    }
    return close_permutations(n, gens, name);
}

} // namespace

GroupPtr symmetric(std::uint32_t n) { return permutation_family(n, false); }
GroupPtr alternating(std::uint32_t n) { return permutation_family(n, true); }

GroupPtr heisenberg(std::uint64_t p) {
    require_prime(p, "heisenberg");
    if (p == 2) fail(Errc::parameter_out_of_range, "heisenberg: p must be odd");
    std::string name = "Heis" + std::to_string(p);
    checked_size(checked_pow(p, 3, name), name);
    std::uint64_t p2 = p * p;
    // code = a + p*b + p^2*c for the unitriangular matrix with top row
    // (1, a, c) and middle row (0, 1, b).
    auto mul = [p, p2](std::uint64_t x, std::uint64_t y) {
        std::uint64_t a1 = x % p, b1 = x / p % p, c1 = x / p2;
        std::uint64_t a2 = y % p, b2 = y / p % p, c2 = y / p2;
        return (a1 + a2) % p + p * ((b1 + b2) % p) + p2 * ((c1 + c2 + a1 * b2) % p);
    };
    auto label = [p, p2](std::uint64_t x) {
        return "(" + std::to_string(x % p) + "," + std::to_string(x / p % p) + "," + std::to_string(x / p2) +
               ")";
    };
    return close_codes(0, {1, p}, mul, label, name);
}

GroupPtr modular_p3(std::uint64_t p) {
    require_prime(p, "modular_p3");
    std::string name = "M3(" + std::to_string(p) + ")";
    checked_size(checked_pow(p, 3, name), name);
    std::uint64_t p2 = p * p;
    std::vector<std::uint64_t> spow(p);
    spow[0] = 1;
    for (std::uint64_t t = 1; t < p; ++t) spow[t] = spow[t - 1] * (1 + p) % p2;
    // code = x + p^2*t; t acts on x by multiplication with (1+p)^t.
    auto mul = [p2, spow](std::uint64_t a, std::uint64_t b) {
        std::uint64_t x1 = a % p2, t1 = a / p2, x2 = b % p2, t2 = b / p2;
        return (x1 + x2 * spow[t1]) % p2 + p2 * ((t1 + t2) % (spow.size()));
    };
    auto label = [p2](std::uint64_t a) {
        return "(" + std::to_string(a % p2) + ";" + std::to_string(a / p2) + ")";
    };
    return close_codes(0, {1, p2}, mul, label, name);
}

GroupPtr p_group_P(std::uint32_t n, std::uint64_t p) {
    if (n < 2) fail(Errc::parameter_out_of_range, "P(n,p): n must be >= 2");
    return elementary_abelian(p, n);
}

GroupPtr p_group_P(std::uint32_t n, std::uint64_t p, std::uint64_t q) {
    require_prime(p, "P(n,p,q)");
    require_prime(q, "P(n,p,q)");
    if (n < 2) fail(Errc::parameter_out_of_range, "P(n,p,q): n must be >= 2");
    if (q == p || (p - 1) % q != 0)
        fail(Errc::bad_power_automorphism, "P(n,p,q): " + std::to_string(q) + " does not divide " +
                                               std::to_string(p) + " - 1, no faithful power action");
    std::string name =
        "P(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
    std::uint64_t kernel = checked_pow(p, n - 1, name);
    checked_size(kernel * q, name);

    std::uint64_t m = 0;
    for (std::uint64_t c = 2; c < p; ++c)
        if (multiplicative_order(c, p) == q) {
            m = c;
            break;
        }
    require_internal(m != 0, "order-q unit mod p exists when q | p-1");
    std::vector<std::uint64_t> mpow(q);
    mpow[0] = 1;
    for (std::uint64_t t = 1; t < q; ++t) mpow[t] = mpow[t - 1] * m % p;

    std::uint32_t dim = n - 1;
    auto mul = [p, q, kernel, mpow, dim](std::uint64_t x, std::uint64_t y) {
        std::uint64_t v = x % kernel, t1 = x / kernel, w = y % kernel, t2 = y / kernel;
        std::uint64_t scale = mpow[t1];
        std::uint64_t r = 0, mult = 1;
        for (std::uint32_t i = 0; i < dim; ++i) {
            r += (v % p + w % p * scale) % p * mult;
            v /= p;
            w /= p;
            mult *= p;
        }
        return r + kernel * ((t1 + t2) % q);
    };
    auto label = [p, kernel, dim](std::uint64_t x) {
        std::uint64_t v = x % kernel;
        std::string s = "(";
        for (std::uint32_t i = 0; i < dim; ++i) {
            if (i) s += ",";
            s += std::to_string(v % p);
            v /= p;
        }
        return s + ";" + std::to_string(x / kernel) + ")";
    };
    std::vector<std::uint64_t> gens;
    std::uint64_t unit = 1;
    for (std::uint32_t i = 0; i < dim; ++i) {
        gens.push_back(unit);
        unit *= p;
    }
    gens.push_back(kernel);
    return close_codes(0, gens, mul, label, name);
}

namespace {

// Shared core of schmidt_abelian and frobenius_sum: `copies` summands of
// GF(p^r) with an order-q scalar acting on every summand at once, extended
// by a cyclic group of order q^beta driving the action through t mod q.
GroupPtr scalar_action_group(std::uint64_t p, std::uint64_t q, std::uint32_t beta, std::uint32_t copies,
                             std::string name) {
    require_prime(p, name);
    require_prime(q, name);
    if (p == q) fail(Errc::parameter_out_of_range, name + ": p and q must be distinct");
    if (beta < 1 || copies < 1) fail(Errc::parameter_out_of_range, name + ": beta and copies must be >= 1");
    std::uint32_t r = multiplicative_order(p, q);
    FieldPtr f = gf_make(p, r);
    std::uint64_t qpart = checked_pow(q, beta, name);
    std::uint64_t fsize = f->size();
    std::uint64_t vpart = 1;
    for (std::uint32_t i = 0; i < copies; ++i) vpart = checked_size(vpart * fsize, name);
    checked_size(vpart * qpart, name);

    GaloisField::Elem lambda = f->element_of_order(static_cast<std::uint32_t>(q));
    std::vector<GaloisField::Elem> lpow(q);
    lpow[0] = f->one();
    for (std::uint64_t t = 1; t < q; ++t) lpow[t] = f->mul(lpow[t - 1], lambda);

    auto mul = [f, q, qpart, fsize, vpart, copies, lpow](std::uint64_t x, std::uint64_t y) {
        std::uint64_t u = x % vpart, t1 = x / vpart, w = y % vpart, t2 = y / vpart;
        GaloisField::Elem scale = lpow[t1 % q];
        std::uint64_t r_ = 0, mult = 1;
        for (std::uint32_t i = 0; i < copies; ++i) {
            auto ui = static_cast<GaloisField::Elem>(u % fsize);
            auto wi = static_cast<GaloisField::Elem>(w % fsize);
            r_ += std::uint64_t(f->add(ui, f->mul(scale, wi))) * mult;
            u /= fsize;
            w /= fsize;
            mult *= fsize;
        }
        return r_ + vpart * ((t1 + t2) % qpart);
    };
    auto label = [f, fsize, vpart, copies](std::uint64_t x) {
        std::uint64_t u = x % vpart;
        std::string s = "(";
        for (std::uint32_t i = 0; i < copies; ++i) {
            if (i) s += "+";
            s += f->element_repr(static_cast<GaloisField::Elem>(u % fsize));
            u /= fsize;
        }
        return s + ";" + std::to_string(x / vpart) + ")";
    };
    std::vector<std::uint64_t> gens;
    std::uint64_t unit = 1;
    for (std::uint32_t i = 0; i < copies; ++i) {
        gens.push_back(unit); // the field's one in summand i
        unit *= fsize;
    }
    gens.push_back(vpart);
    return close_codes(0, gens, mul, label, std::move(name));
}

} // namespace

GroupPtr schmidt_abelian(std::uint64_t p, std::uint64_t q, std::uint32_t beta) {
    std::string name = "Schmidt(" + std::to_string(p) + "," + std::to_string(q) +
                       (beta == 1 ? "" : "," + std::to_string(beta)) + ")";
    return scalar_action_group(p, q, beta, 1, std::move(name));
}

GroupPtr frobenius_sum(std::uint64_t p, std::uint64_t q, std::uint32_t copies) {
    std::string name = "FrobSum(" + std::to_string(p) + "," + std::to_string(q) + "," +
                       std::to_string(copies) + ")";
    return scalar_action_group(p, q, 1, copies, std::move(name));
}

GroupPtr sl2(std::uint32_t q) {
    static constexpr std::array<std::uint32_t, 9> allowed{2, 3, 4, 5, 7, 8, 9, 11, 13};
    bool ok = false;
    for (std::uint32_t a : allowed) ok = ok || a == q;
    if (!ok)
        fail(Errc::parameter_out_of_range,
             "SL(2,q): q = " + std::to_string(q) + " not in {2,3,4,5,7,8,9,11,13}");
    std::uint64_t p = q;
    std::uint32_t k = 1;
    if (q == 4 || q == 8) {
        p = 2;
        k = q == 4 ? 2 : 3;
    } else if (q == 9) {
        p = 3;
        k = 2;
    }
    FieldPtr f = gf_make(p, k);
    std::uint64_t qq = q;
    // code = a + q*b + q^2*c + q^3*d for [[a,b],[c,d]] of field indices.
    auto mul = [f, qq](std::uint64_t x, std::uint64_t y) {
        auto a1 = static_cast<GaloisField::Elem>(x % qq), b1 = static_cast<GaloisField::Elem>(x / qq % qq),
             c1 = static_cast<GaloisField::Elem>(x / (qq * qq) % qq),
             d1 = static_cast<GaloisField::Elem>(x / (qq * qq * qq));
        auto a2 = static_cast<GaloisField::Elem>(y % qq), b2 = static_cast<GaloisField::Elem>(y / qq % qq),
             c2 = static_cast<GaloisField::Elem>(y / (qq * qq) % qq),
             d2 = static_cast<GaloisField::Elem>(y / (qq * qq * qq));
        std::uint64_t a = f->add(f->mul(a1, a2), f->mul(b1, c2));
        std::uint64_t b = f->add(f->mul(a1, b2), f->mul(b1, d2));
        std::uint64_t c = f->add(f->mul(c1, a2), f->mul(d1, c2));
        std::uint64_t d = f->add(f->mul(c1, b2), f->mul(d1, d2));
        return a + qq * b + qq * qq * c + qq * qq * qq * d;
    };
    auto label = [f, qq](std::uint64_t x) {
        return "[[" + f->element_repr(static_cast<GaloisField::Elem>(x % qq)) + "," +
               f->element_repr(static_cast<GaloisField::Elem>(x / qq % qq)) + "],[" +
               f->element_repr(static_cast<GaloisField::Elem>(x / (qq * qq) % qq)) + "," +
               f->element_repr(static_cast<GaloisField::Elem>(x / (qq * qq * qq))) + "]]";
    };
    std::uint64_t one = f->one(), neg1 = f->neg(f->one());
    std::uint64_t identity = one + qq * qq * qq * one;
    std::uint64_t gen_a = one + qq * one + qq * qq * qq * one;      // [[1,1],[0,1]]
    std::uint64_t gen_b = qq * one + qq * qq * neg1;                // [[0,1],[-1,0]]
    std::vector<std::uint64_t> gens{gen_a, gen_b};
    // Those two have prime-subfield entries only, so over GF(p^k) with k > 1
    // they close over SL(2,p).  Adjoin [[1,x],[0,1]] for the defining root x
    // (coefficient vector (0,1), element index p).
    if (k > 1) gens.push_back(one + qq * p + qq * qq * qq * one);
    return close_over<std::uint64_t, decltype(mul), decltype(label), U64Hash>(
        identity, gens, mul, label, "SL(2," + std::to_string(q) + ")");
}

GroupPtr psl2(std::uint32_t q) {
    GroupPtr s = sl2(q);
    GroupPtr res = quotient(s, center(s));
    // quotient() names mechanically; give the standard name instead.
    return FiniteGroup::create(
        res->size(), [res](Index a, Index b) { return res->mul(a, b); }, res->generators(),
        [res](Index a) { return res->element_label(a); }, "PSL(2," + std::to_string(q) + ")");
}

GroupPtr from_file(const std::string& path) {
    GeneratorFile gf = load_generator_file(path);
    return close_permutations(gf.degree, gf.generators, "File(" + path + ")");
}

} // namespace psiforge
