#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace flagclass {

/// Integer encoding of a field element: sum c_i p^i over its coefficient
/// vector with respect to the field's polynomial basis. Always < q.
using Elem = std::uint16_t;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 16;

bool is_prime(std::uint64_t n);

/// Returns (p, k) with q = p^k, or throws InvalidArgument when q is not a
/// prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(std::uint64_t q);

/// The finite field F_{p^k}, built on the lexicographically smallest monic
/// irreducible polynomial of degree k over F_p.
///
/// A FiniteField is a cheap handle onto immutable shared tables, so copies
/// share state and may be used concurrently from any number of threads.
class FiniteField {
public:
    /// Throws NotPrime if p is composite and CapExceeded if p^k > cap.
    static FiniteField make(unsigned p, unsigned k, std::uint64_t cap = kDefaultFieldCap);
    /// Convenience: the field of order q (a prime power).
    static FiniteField of_order(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);

    unsigned p() const { return t_->p; }
    unsigned k() const { return t_->k; }
    unsigned q() const { return t_->q; }

    /// Modulus coefficients c_0..c_k (monic, so c_k = 1). For k = 1 this is
    /// the placeholder x; arithmetic is plain reduction mod p.
    const std::vector<unsigned>& modulus() const { return t_->modulus; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        if (t_->k == 1) {
            unsigned s = unsigned{a} + b;
            return static_cast<Elem>(s >= t_->p ? s - t_->p : s);
        }
        if (!t_->add.empty()) return t_->add[std::size_t{a} * t_->q + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    /// Throws InvalidArgument for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_integer(std::int64_t v) const;

    /// Smallest-encoded element of multiplicative order q - 1.
    Elem primitive_element() const { return t_->primitive; }

    /// Multiplicative order of a nonzero element, by repeated multiplication.
    std::uint64_t multiplicative_order(Elem a) const;

    /// The element x^i of the polynomial basis (encoding p^i), i < k.
    Elem basis_element(unsigned i) const;

    bool operator==(const FiniteField& other) const {
        return t_ == other.t_ || (p() == other.p() && k() == other.k());
    }

private:
    struct Tables {
        unsigned p = 0;
        unsigned k = 0;
        unsigned q = 0;
        std::vector<unsigned> modulus;
        std::vector<Elem> add;  // q*q table, only for k > 1 and q <= 256
        std::vector<Elem> neg;
        std::vector<std::uint32_t> log;  // log[0] unused
        std::vector<Elem> exp;           // length 2(q-1)
        Elem primitive = 1;
    };

    explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    Elem add_digits(Elem a, Elem b) const;

    std::shared_ptr<const Tables> t_;
};

}  // namespace flagclass
