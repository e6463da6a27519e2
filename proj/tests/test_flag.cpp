#include "flagclass/errors.hpp"
#include "flagclass/flag.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace flagclass;

namespace {

FlagContext make_ctx(const char* d, std::uint64_t q) {
    return FlagContext(DimensionVector::parse(d), FiniteField::of_order(q));
}

MatrixFq one_plus_unit(const FlagContext& ctx, unsigned r, unsigned s) {
    return MatrixFq::identity(ctx.field(), ctx.n()) +
           MatrixFq::unit(ctx.field(), ctx.n(), r, s);
}

}  // namespace

TEST_CASE("dimension vectors") {
    const auto d = DimensionVector::parse("2,3,4");
    CHECK(d.blocks() == std::vector<unsigned>{2, 1, 1});
    CHECK(d.n() == 4);
    CHECK(d.nilradical_dim() == 5);
    CHECK(d.finite_type());
    CHECK(DimensionVector::parse("1, 1 ,2").blocks() == std::vector<unsigned>{1, 0, 1});
    CHECK_FALSE(DimensionVector::parse("1,2,3,4,5,6").finite_type());
    CHECK_THROWS_AS(DimensionVector::parse("3,2"), InvalidArgument);
    CHECK_THROWS_AS(DimensionVector::parse("1,,2"), InvalidArgument);
    CHECK_THROWS_AS(DimensionVector::parse("0"), InvalidArgument);
    CHECK_THROWS_AS(DimensionVector::parse("a"), InvalidArgument);
}

TEST_CASE("membership predicates") {
    const auto ctx = make_ctx("2,3,4", 2);
    const auto id = MatrixFq::identity(ctx.field(), 4);
    CHECK(ctx.in_P(id));
    CHECK(ctx.in_U(id));
    // 1 + E_13 (1-based) crosses blocks {1,2} -> {3}.
    CHECK(ctx.in_U(one_plus_unit(ctx, 0, 2)));
    // E_21 lies inside the first Levi block.
    CHECK_FALSE(ctx.in_nilradical(MatrixFq::unit(ctx.field(), 4, 1, 0)));
    CHECK(ctx.in_P(one_plus_unit(ctx, 1, 0)));
    CHECK_FALSE(ctx.in_U(one_plus_unit(ctx, 1, 0)));
    CHECK_FALSE(ctx.in_P(one_plus_unit(ctx, 2, 0)));
    CHECK_FALSE(ctx.in_P(MatrixFq::zero(ctx.field(), 4)));
    CHECK_THROWS_AS(ctx.in_P(MatrixFq::identity(ctx.field(), 3)), DimensionMismatch);
    CHECK(ctx.cross_positions().size() == 5);
}

TEST_CASE("group orders") {
    {
        const auto o = make_ctx("2,3,4", 2).group_orders();
        CHECK(o.dim_u == 5);
        CHECK(o.order_U == 32);
        CHECK(o.order_L == 6);
        CHECK(o.order_P == 192);
    }
    {
        const auto o = make_ctx("1,2", 3).group_orders();
        CHECK(o.dim_u == 1);
        CHECK(o.order_U == 3);
        CHECK(o.order_L == 4);
    }
    {
        const auto o = make_ctx("3", 5).group_orders();
        CHECK(o.dim_u == 0);
        CHECK(o.order_U == 1);
        CHECK(o.order_P == gl_order(3, 5));
    }
}

TEST_CASE("orders agree with exhaustive membership counts") {
    const auto ctx = make_ctx("2,3,4", 2);
    std::uint64_t in_u = 0;
    std::uint64_t in_p = 0;
    oracle::for_each_matrix(ctx.field(), 4, [&](const MatrixFq& g) {
        if (ctx.in_U(g)) ++in_u;
        if (ctx.in_P(g)) ++in_p;
    });
    CHECK(in_u == 32);
    CHECK(in_p == 192);
    CHECK(oracle::parabolic_elements(ctx.dims(), ctx.field()).size() == 192);
}

TEST_CASE("P is closed under products and inverses") {
    for (std::uint64_t q : {2, 3}) {
        const auto ctx = make_ctx("1,2", q);
        std::vector<MatrixFq> p;
        oracle::for_each_matrix(ctx.field(), 2, [&](const MatrixFq& g) {
            if (ctx.in_P(g)) p.push_back(g);
        });
        CHECK(BigInt(p.size()) == ctx.group_orders().order_P);
        for (const auto& g : p) {
            CHECK(ctx.in_P(*g.try_inverse()));
            for (const auto& h : p) CHECK(ctx.in_P(g * h));
        }
    }
    std::mt19937 rng(1);
    const auto ctx = make_ctx("1,3,4", 5);
    const auto gens = ctx.generators_P();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        MatrixFq g = MatrixFq::identity(ctx.field(), 4);
        for (int k = 0; k < 12; ++k) g = g * gens[pick(rng)];
        CHECK(ctx.in_P(g));
        CHECK(ctx.in_P(*g.try_inverse()));
    }
}

TEST_CASE("nilradical elements are nilpotent of index <= t") {
    for (const char* d : {"1,2,3", "2,3,4", "1,1,2", "1,2,3,4"}) {
        const auto ctx = make_ctx(d, 2);
        const std::size_t t = ctx.dims().length();
        for (const MatrixFq& x : ctx.enumerate_nilradical()) {
            MatrixFq power = MatrixFq::identity(ctx.field(), ctx.n());
            for (std::size_t i = 0; i < t; ++i) power = power * x;
            CHECK(power.is_zero());
        }
    }
}

TEST_CASE("in_U iff g - 1 nilradical and g invertible") {
    const auto ctx = make_ctx("1,2", 3);
    oracle::for_each_matrix(ctx.field(), 2, [&](const MatrixFq& g) {
        const bool rhs = ctx.in_nilradical(g - MatrixFq::identity(ctx.field(), 2)) &&
                         g.try_inverse().has_value();
        CHECK(ctx.in_U(g) == rhs);
    });
}

TEST_CASE("generators are closed under inverses and generate P") {
    struct Case {
        const char* d;
        std::uint64_t q;
    };
    for (const Case c : {Case{"1,2", 2}, Case{"2,2", 2}, Case{"1,2", 3}, Case{"1,2", 4},
                         Case{"2,3,4", 2}, Case{"1,1,2", 3}, Case{"1,2,3", 3}, Case{"3", 2},
                         Case{"2,4", 2}}) {
        CAPTURE(c.d);
        CAPTURE(c.q);
        const auto ctx = make_ctx(c.d, c.q);
        const auto gens = ctx.generators_P();
        for (const auto& g : gens) {
            CHECK(ctx.in_P(g));
            const auto inv = *g.try_inverse();
            CHECK(std::find(gens.begin(), gens.end(), inv) != gens.end());
        }
        const auto closure = oracle::group_closure(ctx.field(), ctx.n(), gens);
        CHECK(BigInt(closure.size()) == ctx.group_orders().order_P);
    }
    CHECK(oracle::group_closure(FiniteField::of_order(2), 2, make_ctx("1,2", 2).generators_P())
              .size() == 2);
    CHECK(oracle::group_closure(FiniteField::of_order(2), 2, make_ctx("2,2", 2).generators_P())
              .size() == 6);
}

TEST_CASE("U generators generate U") {
    for (std::uint64_t q : {2, 4, 9}) {
        const auto ctx = make_ctx("1,3", q);
        std::vector<MatrixFq> gens;
        for (const auto& g : ctx.elementary_generators_U()) gens.push_back(g.matrix(ctx.field(), ctx.n()));
        CHECK(BigInt(oracle::group_closure(ctx.field(), ctx.n(), gens).size()) ==
              ctx.group_orders().order_U);
    }
}

TEST_CASE("in-place conjugation matches g x g^-1") {
    std::mt19937 rng(9);
    for (const char* d : {"2,3,4", "1,3,4", "3,5", "1,2,3,4"})
        for (std::uint64_t q : {2, 3, 4, 9}) {
            const auto ctx = make_ctx(d, q);
            const auto gens = ctx.elementary_generators_P();
            std::uniform_int_distribution<std::uint64_t> pick(
                0, static_cast<std::uint64_t>(std::min<BigInt>(ctx.state_count() - 1, 1u << 30)));
            for (int trial = 0; trial < 20; ++trial) {
                const MatrixFq x = ctx.matrix_at(pick(rng));
                for (const auto& g : gens) {
                    const MatrixFq gm = g.matrix(ctx.field(), ctx.n());
                    MatrixFq y = x;
                    g.conjugate(y.entries(), ctx.n(), ctx.field());
                    CHECK(y == gm * x * *gm.try_inverse());
                    CHECK(g.inverse(ctx.field()).matrix(ctx.field(), ctx.n()) == *gm.try_inverse());
                }
            }
        }
}

TEST_CASE("nilradical enumeration") {
    {
        const auto ctx = make_ctx("1,2", 3);
        std::vector<MatrixFq> all(ctx.enumerate_nilradical().begin(), ctx.enumerate_nilradical().end());
        REQUIRE(all.size() == 3);
        CHECK(all[0].is_zero());
        CHECK(all[1] == MatrixFq::unit(ctx.field(), 2, 0, 1));
        CHECK(all[2] == MatrixFq::unit(ctx.field(), 2, 0, 1, 2));
    }
    CHECK(make_ctx("2,3,4", 2).enumerate_nilradical().size() == 32);
    CHECK(make_ctx("1,2,3,4,5", 2).enumerate_nilradical().size() == 1024);

    const auto ctx = make_ctx("1,3,4", 3);
    std::uint64_t expected = 0;
    for (const MatrixFq& x : ctx.enumerate_nilradical()) {
        CHECK(ctx.in_nilradical(x));
        CHECK(ctx.index_of(x) == expected++);
    }
    CHECK_THROWS_AS(ctx.index_of(MatrixFq::identity(ctx.field(), 4)), MembershipViolation);
    CHECK_THROWS_AS(make_ctx("1,2,3,4,5", 7).enumerate_nilradical(), CapExceeded);
    CHECK_THROWS_AS(make_ctx("2,3,4", 2).enumerate_nilradical(31), CapExceeded);
}
