#pragma once

// Brute-force reference computations. None of these use the orbit engine,
// the generator lists or the enumeration-index encoding.

#include "flagclass/flag.hpp"
#include "flagclass/gf.hpp"
#include "flagclass/matfq.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using flagclass::Elem;
using flagclass::FiniteField;
using flagclass::MatrixFq;

using Key = std::vector<Elem>;

inline Key key(const MatrixFq& m) { return {m.entries().begin(), m.entries().end()}; }

/// Every n x n matrix over F, passed to `fn` one at a time.
inline void for_each_matrix(const FiniteField& f, std::size_t n,
                            const std::function<void(const MatrixFq&)>& fn) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= f.q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elem> e(n * n);
        std::uint64_t rest = idx;
        for (auto& v : e) {
            v = static_cast<Elem>(rest % f.q());
            rest /= f.q();
        }
        fn(MatrixFq(f, n, std::move(e)));
    }
}

/// Direct polynomial-arithmetic check for irreducibility over F_p: no root
/// and no monic factor of degree <= deg/2, tried by full multiplication.
inline bool irreducible_by_products(const std::vector<unsigned>& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    auto mul = [p](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
        std::vector<unsigned> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return r;
    };
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t na = 1, nb = 1;
        for (std::size_t i = 0; i < d; ++i) na *= p;
        for (std::size_t i = 0; i < deg - d; ++i) nb *= p;
        for (std::uint64_t ia = 0; ia < na; ++ia)
            for (std::uint64_t ib = 0; ib < nb; ++ib) {
                std::vector<unsigned> a(d + 1, 1), b(deg - d + 1, 1);
                std::uint64_t r = ia;
                for (std::size_t i = 0; i < d; ++i, r /= p) a[i] = r % p;
                r = ib;
                for (std::size_t i = 0; i < deg - d; ++i, r /= p) b[i] = r % p;
                if (mul(a, b) == f) return false;
            }
    }
    return true;
}

/// Closure of a set of matrices under multiplication (a finite group).
inline std::set<Key> group_closure(const FiniteField& f, std::size_t n,
                                   const std::vector<MatrixFq>& gens) {
    std::set<Key> seen;
    std::deque<MatrixFq> queue;
    const MatrixFq id = MatrixFq::identity(f, n);
    seen.insert(key(id));
    queue.push_back(id);
    while (!queue.empty()) {
        const MatrixFq g = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            MatrixFq h = g * s;
            if (seen.insert(key(h)).second) queue.push_back(std::move(h));
        }
    }
    return seen;
}

/// Elements of P(d) by scanning all q^{n^2} matrices with the block test
/// written out directly against the dimension vector.
inline std::vector<MatrixFq> parabolic_elements(const flagclass::DimensionVector& d,
                                                const FiniteField& f) {
    const std::size_t n = d.n();
    std::vector<unsigned> block(n);
    std::size_t col = 0;
    for (unsigned i = 0; i < d.blocks().size(); ++i)
        for (unsigned j = 0; j < d.blocks()[i]; ++j) block[col++] = i;
    std::vector<MatrixFq> out;
    for_each_matrix(f, n, [&](const MatrixFq& g) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                if (block[r] > block[s] && g(r, s) != 0) return;
        if (g.try_inverse()) out.push_back(g);
    });
    return out;
}

/// Elements of U(d) = 1 + u(d), built from the block description.
inline std::vector<MatrixFq> unipotent_elements(const flagclass::DimensionVector& d,
                                                const FiniteField& f) {
    const std::size_t n = d.n();
    std::vector<unsigned> block(n);
    std::size_t col = 0;
    for (unsigned i = 0; i < d.blocks().size(); ++i)
        for (unsigned j = 0; j < d.blocks()[i]; ++j) block[col++] = i;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            if (block[r] < block[s]) free.emplace_back(r, s);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= f.q();
    std::vector<MatrixFq> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        MatrixFq u = MatrixFq::identity(f, n);
        std::uint64_t rest = idx;
        for (const auto& [r, s] : free) {
            u(r, s) = static_cast<Elem>(rest % f.q());
            rest /= f.q();
        }
        out.push_back(std::move(u));
    }
    return out;
}

/// Number of orbits of `group` acting on `points` by conjugation.
inline std::size_t conjugation_orbits(const std::vector<MatrixFq>& group,
                                      const std::vector<MatrixFq>& points) {
    std::vector<MatrixFq> inverses;
    for (const auto& g : group) inverses.push_back(*g.try_inverse());
    std::set<Key> seen;
    std::size_t orbits = 0;
    for (const auto& x : points) {
        if (seen.count(key(x))) continue;
        ++orbits;
        for (std::size_t i = 0; i < group.size(); ++i) seen.insert(key(group[i] * x * inverses[i]));
    }
    return orbits;
}

/// k(U): conjugacy classes of U(d) by conjugating every element by all of U.
inline std::size_t class_number(const flagclass::DimensionVector& d, const FiniteField& f) {
    const auto u = unipotent_elements(d, f);
    return conjugation_orbits(u, u);
}

/// Number of P(d)-conjugacy classes in U(d).
inline std::size_t parabolic_class_number(const flagclass::DimensionVector& d,
                                          const FiniteField& f) {
    return conjugation_orbits(parabolic_elements(d, f), unipotent_elements(d, f));
}

/// Number of pairs (a, b) in U x U with ab = ba.
inline std::uint64_t commuting_pair_count(const flagclass::DimensionVector& d,
                                          const FiniteField& f) {
    const auto u = unipotent_elements(d, f);
    std::uint64_t count = 0;
    for (const auto& a : u)
        for (const auto& b : u)
            if (a * b == b * a) ++count;
    return count;
}

}  // namespace oracle
