#include "flagclass/polyq.hpp"

#include "flagclass/errors.hpp"

#include <set>
#include <string>

namespace flagclass {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

RationalPolynomial newton(const std::vector<std::pair<BigInt, BigInt>>& points) {
    std::set<BigInt> seen;
    for (const auto& [x, y] : points)
        if (!seen.insert(x).second) throw DuplicateAbscissa("repeated abscissa " + x.str());

    const std::size_t m = points.size();
    std::vector<Rational> dd;
    for (const auto& pt : points) dd.emplace_back(pt.second);
    // dd[i] becomes f[x_0, ..., x_i] after column pass j = i.
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - j].first);

    // Horner over the Newton basis: p = dd0 + (x - x0)(dd1 + (x - x1)(...)).
    std::vector<Rational> coeffs{dd[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        std::vector<Rational> next(coeffs.size() + 1, Rational(0));
        const Rational x = points[i].first;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= x * coeffs[k];
        }
        next[0] += dd[i];
        coeffs = std::move(next);
    }
    trim(coeffs);
    return {std::move(coeffs), points};
}

}  // namespace

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

RationalPolynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& points) {
    if (points.size() < 2) throw InvalidArgument("interpolation needs at least two points");
    RationalPolynomial p = newton(points);
    for (const auto& [x, y] : points)
        if (p(Rational(x)) != Rational(y))
            throw InternalInconsistency("interpolant misses sample at q=" + x.str());
    return p;
}

bool certify_integer_coefficients(const RationalPolynomial& p) {
    for (const auto& c : p.coeffs)
        if (denominator(c) != 1) return false;
    return true;
}

std::vector<Rational> taylor_shift(const std::vector<Rational>& coeffs, const Rational& shift) {
    // Repeated synthetic division by (x - shift).
    std::vector<Rational> c = coeffs;
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = m - 1; j > i; --j) c[j - 1] += shift * c[j];
    trim(c);
    return c;
}

std::vector<Rational> rebase_q_minus_1(const RationalPolynomial& p) {
    return taylor_shift(p.coeffs, Rational(1));
}

std::vector<Rational> rebase_from_q_minus_1(const std::vector<Rational>& shifted) {
    return taylor_shift(shifted, Rational(-1));
}

StabilityReport stability_check(const std::map<std::uint64_t, BigInt>& counts,
                                std::uint64_t holdout) {
    const auto it = counts.find(holdout);
    if (it == counts.end())
        throw InvalidArgument("holdout q=" + std::to_string(holdout) + " has no recorded count");
    if (counts.size() < 2) throw InvalidArgument("stability check needs at least two counts");
    std::vector<std::pair<BigInt, BigInt>> points;
    for (const auto& [q, v] : counts)
        if (q != holdout) points.emplace_back(BigInt(q), v);
    const RationalPolynomial p = points.size() == 1 ? newton(points) : interpolate(points);
    StabilityReport r{BigInt(holdout), p(Rational(holdout)), it->second, false};
    r.match = r.predicted == Rational(r.actual);
    return r;
}

}  // namespace flagclass
