#pragma once

#include "flagclass/bigint.hpp"
#include "flagclass/flag.hpp"
#include "flagclass/gf.hpp"
#include "flagclass/matfq.hpp"
#include "flagclass/orbit.hpp"
#include "flagclass/polyq.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace flagclass {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
/// decimal strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

/// {"p":..,"k":..,"modulus":[c_0,..,c_k]}
Json field_to_json(const FiniteField& f);
/// Rebuilds the field and checks the recorded modulus matches.
FiniteField field_from_json(const Json& j);

/// {"n":..,"rows":[[..],..]} with integer-encoded entries.
Json matrix_to_json(const MatrixFq& m);
MatrixFq matrix_from_json(const FiniteField& f, const Json& j);

Json context_to_json(const FlagContext& ctx);
Json record_to_json(const OrbitRecord& rec);
Json partition_to_json(const OrbitPartition& part);

enum class Basis { Q, QMinus1 };

/// {"basis":"q"|"q-1","coeffs":[[num,den],..],"samples":[[q,v],..],"integer_certified":bool}
Json polynomial_to_json(const RationalPolynomial& p, Basis basis);
/// Reads either basis back into ascending coefficients in q.
RationalPolynomial polynomial_from_json(const Json& j);

/// Human-readable polynomial, e.g. "2*q^3 - q" or "2*(q-1)^3 + 6*(q-1)^2 + ...".
std::string format_polynomial(const std::vector<Rational>& coeffs, Basis basis);

std::string csv_summary_header();
std::string csv_summary_row(const FlagContext& ctx, const ClassCounts& counts);

}  // namespace flagclass
