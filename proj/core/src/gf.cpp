#include "flagclass/gf.hpp"

#include "flagclass/errors.hpp"

#include <string>

namespace flagclass {

namespace {

using Poly = std::vector<unsigned>;  // coefficients over F_p, ascending degree

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        trim(a);
    }
    return a;
}

// Monic polynomial of degree deg whose lower coefficients are the base-p
// digits of index, digit 0 being c_0.
Poly monic_from_index(std::uint64_t index, unsigned deg, unsigned p) {
    Poly f(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = static_cast<unsigned>(index % p);
        index /= p;
    }
    f[deg] = 1;
    return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
        }
    }
    return true;
}

// Lexicographic in (c_0, c_1, ..., c_{k-1}) means c_0 is the slowest-moving
// digit, so walk the lower coefficients with c_{k-1} as the fastest digit.
Poly smallest_irreducible(unsigned p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(k + 1, 0);
        std::uint64_t rest = idx;
        for (unsigned i = k; i-- > 0;) {
            f[i] = static_cast<unsigned>(rest % p);
            rest /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw InternalInconsistency("no irreducible polynomial of degree " + std::to_string(k));
}

Poly digits(unsigned value, unsigned p, unsigned k) {
    Poly c(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        c[i] = value % p;
        value /= p;
    }
    return c;
}

unsigned undigits(const Poly& c, unsigned p) {
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

unsigned slow_mul(unsigned a, unsigned b, const Poly& modulus, unsigned p, unsigned k) {
    if (k == 1) return static_cast<unsigned>((std::uint64_t{a} * b) % p);
    const Poly ca = digits(a, p, k);
    const Poly cb = digits(b, p, k);
    Poly prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    Poly r = poly_mod(prod, modulus, p);
    r.resize(k, 0);
    return undigits(r, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<unsigned, unsigned> prime_power_decomposition(std::uint64_t q) {
    if (q < 2) throw InvalidArgument("not a prime power: " + std::to_string(q));
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
    return {static_cast<unsigned>(p), k};
}

FiniteField FiniteField::make(unsigned p, unsigned k, std::uint64_t cap) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (k == 0) throw InvalidArgument("extension degree must be >= 1");
    const std::uint64_t limit = std::min<std::uint64_t>(cap, kDefaultFieldCap);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > limit)
            throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds cap " + std::to_string(limit));
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<unsigned>(q);
    t->modulus = k == 1 ? Poly{0, 1} : smallest_irreducible(p, k);

    t->neg.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        Poly c = digits(a, p, k);
        for (auto& ci : c) ci = (p - ci) % p;
        t->neg[a] = static_cast<Elem>(undigits(c, p));
    }
    if (k > 1 && q <= 256) {
        t->add.resize(q * q);
        for (unsigned a = 0; a < q; ++a) {
            const Poly ca = digits(a, p, k);
            for (unsigned b = 0; b < q; ++b) {
                Poly cb = digits(b, p, k);
                for (unsigned i = 0; i < k; ++i) cb[i] = (cb[i] + ca[i]) % p;
                t->add[a * q + b] = static_cast<Elem>(undigits(cb, p));
            }
        }
    }

    // Smallest element of order q - 1, by exhaustive order computation.
    unsigned primitive = 1;
    if (q > 2) {
        for (unsigned g = 2; g < q; ++g) {
            unsigned x = g;
            std::uint64_t order = 1;
            while (x != 1) {
                x = slow_mul(x, g, t->modulus, p, k);
                ++order;
            }
            if (order == q - 1) {
                primitive = g;
                break;
            }
        }
    }
    t->primitive = static_cast<Elem>(primitive);

    const std::uint64_t units = q - 1;
    t->exp.resize(2 * units);
    t->log.assign(q, 0);
    unsigned x = 1;
    for (std::uint64_t i = 0; i < units; ++i) {
        t->exp[i] = static_cast<Elem>(x);
        t->log[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(x, primitive, t->modulus, p, k);
    }
    for (std::uint64_t i = units; i < 2 * units; ++i) t->exp[i] = t->exp[i - units];

    return FiniteField(std::move(t));
}

FiniteField FiniteField::of_order(std::uint64_t q, std::uint64_t cap) {
    const auto [p, k] = prime_power_decomposition(q);
    return make(p, k, cap);
}

Elem FiniteField::add_digits(Elem a, Elem b) const {
    const unsigned p = t_->p;
    unsigned r = 0;
    unsigned scale = 1;
    unsigned x = a;
    unsigned y = b;
    for (unsigned i = 0; i < t_->k; ++i) {
        r += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
    }
    return static_cast<Elem>(r);
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw InvalidArgument("zero has no inverse");
    const std::uint32_t units = t_->q - 1;
    return t_->exp[(units - t_->log[a]) % units];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t units = t_->q - 1;
    return t_->exp[(std::uint64_t{t_->log[a]} * (e % units)) % units];
}

Elem FiniteField::from_integer(std::int64_t v) const {
    const std::int64_t p = t_->p;
    return static_cast<Elem>(((v % p) + p) % p);
}

std::uint64_t FiniteField::multiplicative_order(Elem a) const {
    if (a == 0) throw InvalidArgument("zero has no multiplicative order");
    std::uint64_t order = 1;
    for (Elem x = a; x != 1; x = mul(x, a)) ++order;
    return order;
}

Elem FiniteField::basis_element(unsigned i) const {
    if (i >= t_->k) throw InvalidArgument("basis index out of range");
    unsigned v = 1;
    for (unsigned j = 0; j < i; ++j) v *= t_->p;
    return static_cast<Elem>(v);
}

}  // namespace flagclass
