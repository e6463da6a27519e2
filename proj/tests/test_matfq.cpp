#include "flagclass/errors.hpp"
#include "flagclass/flag.hpp"
#include "flagclass/matfq.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace flagclass;

namespace {

MatrixFq random_matrix(const FiniteField& f, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> dist(0, f.q() - 1);
    MatrixFq m(f, n);
    for (auto& e : m.entries()) e = static_cast<Elem>(dist(rng));
    return m;
}

}  // namespace

TEST_CASE("transvections have order p") {
    const auto f2 = FiniteField::make(2, 1);
    const auto t2 = MatrixFq::from_rows(f2, {{1, 1}, {0, 1}});
    CHECK(t2 * t2 == MatrixFq::identity(f2, 2));

    const auto f3 = FiniteField::make(3, 1);
    const auto t3 = MatrixFq::from_rows(f3, {{1, 1}, {0, 1}});
    CHECK(t3 * t3 * t3 == MatrixFq::identity(f3, 2));
    CHECK_FALSE(t3 * t3 == MatrixFq::identity(f3, 2));
}

TEST_CASE("identity is neutral") {
    std::mt19937 rng(7);
    const auto f = FiniteField::of_order(9);
    const auto a = random_matrix(f, 3, rng);
    CHECK(MatrixFq::identity(f, 3) * a == a);
    CHECK(a * MatrixFq::identity(f, 3) == a);
}

TEST_CASE("rank and kernel dimension") {
    const auto f2 = FiniteField::make(2, 1);
    const auto f5 = FiniteField::make(5, 1);
    CHECK(MatrixFq::zero(f2, 5).kernel_dim() == 5);
    CHECK(MatrixFq::from_rows(f2, {{1, 1}, {1, 1}}).rank() == 1);
    CHECK(MatrixFq::from_rows(f5, {{1, 2}, {2, 4}}).rank() == 1);
    CHECK(MatrixFq::identity(f5, 4).rank() == 4);
}

TEST_CASE("rank of a product is bounded by the factors") {
    std::mt19937 rng(11);
    for (std::uint64_t q : {2, 3, 4}) {
        const auto f = FiniteField::of_order(q);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_matrix(f, 4, rng);
            const auto b = random_matrix(f, 4, rng);
            CHECK((a * b).rank() <= std::min(a.rank(), b.rank()));
        }
    }
}

TEST_CASE("inverse") {
    const auto f5 = FiniteField::make(5, 1);
    CHECK(MatrixFq::identity(f5, 3).try_inverse() == MatrixFq::identity(f5, 3));
    const auto d2 = MatrixFq::identity(f5, 3).scaled(2);
    CHECK(d2.try_inverse() == MatrixFq::identity(f5, 3).scaled(3));
    const auto f2 = FiniteField::make(2, 1);
    CHECK_FALSE(MatrixFq::from_rows(f2, {{1, 1}, {1, 1}}).try_inverse().has_value());

    std::mt19937 rng(3);
    const auto f8 = FiniteField::of_order(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_matrix(f8, 4, rng);
        const auto inv = a.try_inverse();
        CHECK(inv.has_value() == (a.rank() == 4));
        if (inv) CHECK(a * *inv == MatrixFq::identity(f8, 4));
    }
}

TEST_CASE("|GL_m(q)| by exhaustive count matches the product formula") {
    for (unsigned m : {1u, 2u})
        for (std::uint64_t q : {2, 3, 4, 5}) {
            const auto f = FiniteField::of_order(q);
            std::uint64_t invertible = 0;
            oracle::for_each_matrix(f, m, [&](const MatrixFq& g) {
                if (g.rank() == m) ++invertible;
            });
            CHECK(BigInt(invertible) == gl_order(m, q));
        }
}

TEST_CASE("encode is positional and injective") {
    const auto f2 = FiniteField::make(2, 1);
    CHECK(MatrixFq::zero(f2, 3).encode() == 0);
    CHECK(MatrixFq::identity(f2, 2).encode() == 9);

    for (std::uint64_t q : {2, 3}) {
        const auto f = FiniteField::of_order(q);
        std::set<BigInt> keys;
        std::size_t count = 0;
        oracle::for_each_matrix(f, 2, [&](const MatrixFq& m) {
            keys.insert(m.encode());
            ++count;
            CHECK(MatrixFq::decode(f, 2, m.encode()) == m);
        });
        CHECK(keys.size() == count);
    }

    // Keys beyond 64 bits.
    std::mt19937 rng(5);
    const auto f9 = FiniteField::of_order(9);
    const auto big = random_matrix(f9, 6, rng);
    CHECK(MatrixFq::decode(f9, 6, big.encode()) == big);
}

TEST_CASE("dimension errors") {
    const auto f = FiniteField::make(3, 1);
    CHECK_THROWS_AS(MatrixFq::identity(f, 2) * MatrixFq::identity(f, 3), DimensionMismatch);
    CHECK_THROWS_AS(MatrixFq(f, 2, {1, 2, 0}), DimensionMismatch);
    CHECK_THROWS_AS(MatrixFq(f, 1, {3}), InvalidArgument);
    CHECK_THROWS_AS(MatrixFq::identity(f, 2) + MatrixFq::identity(FiniteField::make(5, 1), 2),
                    DimensionMismatch);
}
