#include "flagclass/io.hpp"

#include "flagclass/errors.hpp"

#include <limits>
#include <sstream>

namespace flagclass {

Json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(v);
    if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InvalidArgument("expected an integer, got " + j.dump());
}

Json field_to_json(const FiniteField& f) {
    return Json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

FiniteField field_from_json(const Json& j) {
    const FiniteField f = FiniteField::make(j.at("p").get<unsigned>(), j.at("k").get<unsigned>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<unsigned>>() != f.modulus())
        throw InvalidArgument("field modulus " + j.at("modulus").dump() +
                              " differs from the canonical modulus");
    return f;
}

Json matrix_to_json(const MatrixFq& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.n(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.n(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.n()}, {"rows", std::move(rows)}};
}

MatrixFq matrix_from_json(const FiniteField& f, const Json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const auto rows = j.at("rows").get<std::vector<std::vector<unsigned>>>();
    if (rows.size() != n) throw DimensionMismatch("matrix JSON has wrong row count");
    return MatrixFq::from_rows(f, rows);
}

Json context_to_json(const FlagContext& ctx) {
    const GroupOrders o = ctx.group_orders();
    return Json{{"d", ctx.dims().dims()},
                {"b", ctx.dims().blocks()},
                {"q", ctx.field().q()},
                {"dim_u", o.dim_u},
                {"finite_type", ctx.dims().finite_type()},
                {"orders",
                 {{"order_P", big_to_json(o.order_P)},
                  {"order_U", big_to_json(o.order_U)},
                  {"order_L", big_to_json(o.order_L)}}}};
}

Json record_to_json(const OrbitRecord& rec) {
    return Json{{"rep", matrix_to_json(rec.rep)},
                {"zero_one_rep", rec.zero_one_rep ? matrix_to_json(*rec.zero_one_rep) : Json()},
                {"orbit_size", rec.orbit_size},
                {"u_orbit_size", rec.u_orbit_size},
                {"c_P_order", big_to_json(rec.c_P_order)},
                {"c_U_order", rec.c_U_order},
                {"delta_prime", rec.delta_prime}};
}

Json partition_to_json(const OrbitPartition& part) {
    Json arr = Json::array();
    for (const auto& rec : part.records) arr.push_back(record_to_json(rec));
    return arr;
}

Json polynomial_to_json(const RationalPolynomial& p, Basis basis) {
    const std::vector<Rational> coeffs =
        basis == Basis::Q ? p.coeffs : rebase_q_minus_1(p);
    Json cs = Json::array();
    for (const auto& c : coeffs)
        cs.push_back(Json::array({big_to_json(numerator(c)), big_to_json(denominator(c))}));
    Json samples = Json::array();
    for (const auto& [q, v] : p.samples)
        samples.push_back(Json::array({big_to_json(q), big_to_json(v)}));
    return Json{{"basis", basis == Basis::Q ? "q" : "q-1"},
                {"coeffs", std::move(cs)},
                {"samples", std::move(samples)},
                {"integer_certified", certify_integer_coefficients(p)}};
}

RationalPolynomial polynomial_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        const BigInt den = big_from_json(c.at(1));
        if (den == 0) throw InvalidArgument("zero denominator in polynomial JSON");
        coeffs.emplace_back(big_from_json(c.at(0)), den);
    }
    const std::string basis = j.value("basis", "q");
    if (basis == "q-1")
        coeffs = rebase_from_q_minus_1(coeffs);
    else if (basis != "q")
        throw InvalidArgument("unknown polynomial basis '" + basis + "'");
    RationalPolynomial p{std::move(coeffs), {}};
    if (j.contains("samples"))
        for (const auto& s : j.at("samples"))
            p.samples.emplace_back(big_from_json(s.at(0)), big_from_json(s.at(1)));
    return p;
}

std::string format_polynomial(const std::vector<Rational>& coeffs, Basis basis) {
    const std::string var = basis == Basis::Q ? "q" : "(q-1)";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        const bool unit = mag == 1;
        if (!unit || i == 0) {
            out << mag.str();
            if (i > 0) out << "*";
        }
        if (i >= 1) out << var;
        if (i >= 2) out << "^" << i;
    }
    if (first) out << "0";
    return out.str();
}

std::string csv_summary_header() {
    return "d,q,dim_u,order_P,order_U,order_L,k_U,k_PU,commuting_pairs";
}

std::string csv_summary_row(const FlagContext& ctx, const ClassCounts& counts) {
    const GroupOrders o = ctx.group_orders();
    std::ostringstream out;
    out << '"' << ctx.dims().to_string() << '"' << ',' << ctx.field().q() << ',' << o.dim_u << ','
        << o.order_P << ',' << o.order_U << ',' << o.order_L << ',' << counts.k_U << ','
        << counts.k_PU << ',' << counts.commuting_pairs;
    return out.str();
}

}  // namespace flagclass
