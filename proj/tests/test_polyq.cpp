#include "flagclass/errors.hpp"
#include "flagclass/polyq.hpp"

#include <doctest.h>

using namespace flagclass;

namespace {

std::vector<std::pair<BigInt, BigInt>> sample(const std::vector<std::int64_t>& xs,
                                              BigInt (*f)(const BigInt&)) {
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (auto x : xs) pts.emplace_back(x, f(BigInt(x)));
    return pts;
}

BigInt quartic(const BigInt& q) { return q * q * q * q + q - 1; }
BigInt cubic(const BigInt& q) { return 2 * q * q * q - q; }

}  // namespace

TEST_CASE("interpolation recovers q^4 + q - 1") {
    const auto p = interpolate(sample({2, 3, 4, 5, 7}, quartic));
    REQUIRE(p.degree() == 4);
    CHECK(p.coeffs == std::vector<Rational>{-1, 1, 0, 0, 1});
    CHECK(certify_integer_coefficients(p));
    CHECK(p(Rational(9)) == Rational(quartic(9)));
    CHECK(p(Rational(8)) == Rational(4103));
}

TEST_CASE("interpolation trims to the true degree") {
    const auto p = interpolate(sample({2, 3, 4, 5, 7, 8}, cubic));
    CHECK(p.degree() == 3);
    CHECK(p.coeffs == std::vector<Rational>{0, -1, 0, 2});
}

TEST_CASE("non-integer coefficients are not certified") {
    const auto p = interpolate({{2, 1}, {4, 2}});
    CHECK(p.coeffs == std::vector<Rational>{0, Rational(1, 2)});
    CHECK_FALSE(certify_integer_coefficients(p));
}

TEST_CASE("interpolation errors") {
    CHECK_THROWS_AS(interpolate({{2, 5}}), InvalidArgument);
    CHECK_THROWS_AS(interpolate({{2, 5}, {3, 6}, {2, 7}}), DuplicateAbscissa);
}

TEST_CASE("(q-1) basis") {
    // 2q^3 - q = 2(q-1)^3 + 6(q-1)^2 + 5(q-1) + 1
    const auto p = interpolate(sample({2, 3, 4, 5}, cubic));
    CHECK(rebase_q_minus_1(p) == std::vector<Rational>{1, 5, 6, 2});
    CHECK(rebase_from_q_minus_1({1, 5, 6, 2}) == p.coeffs);
    // q^4 + q - 1 = (q-1)^4 + 4(q-1)^3 + 6(q-1)^2 + 5(q-1) + 1
    CHECK(rebase_q_minus_1(interpolate(sample({2, 3, 4, 5, 7}, quartic))) ==
          std::vector<Rational>{1, 5, 6, 4, 1});
    CHECK(taylor_shift({1, 1}, 3) == std::vector<Rational>{4, 1});
    CHECK(taylor_shift({0, 0, 1}, -1) == std::vector<Rational>{1, -2, 1});
    const std::vector<Rational> odd{Rational(1, 3), 0, Rational(-5, 7), 2};
    CHECK(rebase_from_q_minus_1(taylor_shift(odd, 1)) == odd);
}

TEST_CASE("stability check") {
    std::map<std::uint64_t, BigInt> counts;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) counts[q] = quartic(q);
    auto r = stability_check(counts, 8);
    CHECK(r.match);
    CHECK(r.predicted == Rational(4103));
    // Four remaining points cannot reproduce a quartic.
    counts.erase(5);
    r = stability_check(counts, 8);
    CHECK_FALSE(r.match);
    CHECK(r.actual == 4103);
    CHECK_THROWS_AS(stability_check(counts, 11), InvalidArgument);
}
