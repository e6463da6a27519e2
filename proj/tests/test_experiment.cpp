#include "flagclass/errors.hpp"
#include "flagclass/experiment.hpp"

#include <doctest.h>

using namespace flagclass;

TEST_CASE("default q schedule respects the cap") {
    CHECK(default_q_schedule(DimensionVector::parse("1,2")) == kDefaultQSchedule);
    CHECK(default_q_schedule(DimensionVector::parse("1,2,3,4,5")) == std::vector<std::uint64_t>{2, 3, 4, 5});
    CHECK(default_q_schedule(DimensionVector::parse("2,3,4"), 100) == std::vector<std::uint64_t>{2});
}

TEST_CASE("analyze") {
    const FlagContext ctx(DimensionVector::parse("1,2,3"), FiniteField::of_order(4));
    const Analysis a = analyze(ctx);
    CHECK(a.missing_zero_one == 0);
    CHECK(a.partition.centralizers_filled);
    CHECK(a.counts.k_PU == a.partition.records.size());
    // k(UT_3(q)) = q^2 + q - 1
    CHECK(a.counts.k_U == 19);
}

TEST_CASE("interpolate class counts") {
    const auto r = interpolate_class_counts(DimensionVector::parse("1,3,4"), {2, 3, 4, 5, 7, 8});
    CHECK(r.poly.coeffs == std::vector<Rational>{-1, 1, 0, 0, 1});
    CHECK_FALSE(r.undersampled);
    CHECK(r.counts.at(8) == 4103);
    const auto small = interpolate_class_counts(DimensionVector::parse("1,2,3"), {2, 3});
    CHECK(small.undersampled);
    CHECK_THROWS_AS(interpolate_class_counts(DimensionVector::parse("1,2"), {3}), InvalidArgument);
}

TEST_CASE("verification suite") {
    const auto r = run_verification(DimensionVector::parse("2,3,4"), DimensionVector::parse("1,3,4"),
                                    {2, 3, 4});
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.evidence);
        CHECK(c.pass);
    }
    CHECK(r.all_pass());
    REQUIRE(r.association);
    CHECK(r.association->k_PU_equal);
    CHECK(r.association->k_U_differs);

    CHECK(run_verification(DimensionVector::parse("1,2,3,4,5,6"), std::nullopt, {2}).all_pass());
    CHECK_THROWS_AS(run_verification(DimensionVector::parse("1,2,3,4,5"), std::nullopt, {7}),
                    CapExceeded);
}
