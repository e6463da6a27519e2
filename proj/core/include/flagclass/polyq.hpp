#pragma once

#include "flagclass/bigint.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace flagclass {

/// Univariate polynomial with exact rational coefficients, ascending degree,
/// together with the integer samples it was interpolated from.
struct RationalPolynomial {
    std::vector<Rational> coeffs;
    std::vector<std::pair<BigInt, BigInt>> samples;

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational operator()(const Rational& x) const;
};

/// Newton divided differences in exact arithmetic. Needs at least two
/// points; throws DuplicateAbscissa on a repeated q.
RationalPolynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& points);

bool certify_integer_coefficients(const RationalPolynomial& p);

/// Coefficients of p in powers of (q - 1): p(q) = sum c_i (q - 1)^i.
std::vector<Rational> rebase_q_minus_1(const RationalPolynomial& p);
/// Inverse of rebase_q_minus_1: ascending coefficients in q.
std::vector<Rational> rebase_from_q_minus_1(const std::vector<Rational>& shifted);

/// Taylor shift: coefficients of p(x + shift).
std::vector<Rational> taylor_shift(const std::vector<Rational>& coeffs, const Rational& shift);

struct StabilityReport {
    BigInt holdout;
    Rational predicted;
    BigInt actual;
    bool match = false;
};

/// Interpolates `counts` without the holdout abscissa and compares the
/// prediction at the holdout with its recorded value.
StabilityReport stability_check(const std::map<std::uint64_t, BigInt>& counts,
                                std::uint64_t holdout);

}  // namespace flagclass
