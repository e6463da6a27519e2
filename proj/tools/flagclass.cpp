// flagclass: conjugacy class counts of unipotent radicals of flag parabolics.
//
//   flagclass count --d 2,3,4 --q 2
//   flagclass interpolate --d 2,3,4 --q-list 2,3,4,5 --basis q-1
//   flagclass verify --d 2,3,4 --assoc 1,3,4 --q-list 2,3
//   flagclass reps --d 2,3,4 --q 2 --transfer 3

#include "flagclass/errors.hpp"
#include "flagclass/experiment.hpp"
#include "flagclass/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fc = flagclass;

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kCapExceeded = 2,
    kInconsistent = 3,
    kNotCertified = 4,
    kVerifyFailed = 5,
};

const char* kScopeWarning = "theorem scope t <= 5 exceeded";

struct Common {
    std::uint64_t cap = fc::kDefaultStateCap;
    unsigned threads = 0;
    std::string output = "json";

    fc::EngineOptions engine() const { return {cap, threads}; }
};

std::uint64_t cap_from_env() {
    if (const char* env = std::getenv("FLAGCLASS_CAP")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw fc::InvalidArgument(std::string("FLAGCLASS_CAP must be a positive integer, got '") +
                                  env + "'");
    }
    return fc::kDefaultStateCap;
}

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::uint64_t q = 0;
        try {
            q = std::stoull(item);
        } catch (const std::exception&) {
            throw fc::InvalidArgument("bad q value '" + item + "'");
        }
        fc::prime_power_decomposition(q);
        out.push_back(q);
    }
    if (out.empty()) throw fc::InvalidArgument("empty q list");
    return out;
}

void emit(const fc::Json& j) { std::cout << j.dump(2) << '\n'; }

void warn_scope(const fc::DimensionVector& d, fc::Json& out) {
    if (d.finite_type()) return;
    out["warnings"] = fc::Json::array({kScopeWarning});
    std::cerr << "warning: " << kScopeWarning << " (t=" << d.length() << ")\n";
}

int cmd_count(const Common& common, const std::string& d_text, std::uint64_t q) {
    const fc::DimensionVector d = fc::DimensionVector::parse(d_text);
    const fc::FlagContext ctx(d, fc::FiniteField::of_order(q));
    const fc::Analysis a = fc::analyze(ctx, common.engine());

    if (common.output == "csv") {
        std::cout << fc::csv_summary_header() << '\n' << fc::csv_summary_row(ctx, a.counts) << '\n';
        return kOk;
    }
    if (common.output == "table") {
        const fc::GroupOrders o = ctx.group_orders();
        std::cout << "d=(" << d.to_string() << ") q=" << q << " dim_u=" << o.dim_u << '\n'
                  << "|P|=" << o.order_P << " |U|=" << o.order_U << " |L|=" << o.order_L << '\n'
                  << "k(U)=" << a.counts.k_U << " k(P,U)=" << a.counts.k_PU
                  << " |C(U)|=" << a.counts.commuting_pairs << '\n'
                  << "rep_index  |P.x|  |U.x|  |C_P(x)|  |C_U(x)|  delta'\n";
        for (const auto& r : a.partition.records)
            std::cout << r.rep_index << "  " << r.orbit_size << "  " << r.u_orbit_size << "  "
                      << r.c_P_order << "  " << r.c_U_order << "  " << r.delta_prime << '\n';
        if (!d.finite_type()) std::cout << "warning: " << kScopeWarning << '\n';
        return kOk;
    }
    fc::Json out{{"command", "count"},
                 {"context", fc::context_to_json(ctx)},
                 {"field", fc::field_to_json(ctx.field())},
                 {"k_U", fc::big_to_json(a.counts.k_U)},
                 {"k_PU", a.counts.k_PU},
                 {"commuting_pairs", fc::big_to_json(a.counts.commuting_pairs)},
                 {"routes",
                  {{"orbit_ratio", fc::big_to_json(a.counts.via_orbit_ratio)},
                   {"centralizer_sum", a.counts.via_centralizers.str()},
                   {"burnside", fc::big_to_json(a.counts.via_burnside)}}},
                 {"records", fc::partition_to_json(a.partition)}};
    warn_scope(d, out);
    emit(out);
    return kOk;
}

int cmd_interpolate(const Common& common, const std::string& d_text,
                    const std::string& q_text, const std::string& basis_text) {
    const fc::DimensionVector d = fc::DimensionVector::parse(d_text);
    const auto q_list = q_text.empty() ? fc::default_q_schedule(d, common.cap) : parse_q_list(q_text);
    if (q_list.size() < 2) throw fc::InvalidArgument("interpolation needs at least two q values");
    const fc::Basis basis = basis_text == "q-1" ? fc::Basis::QMinus1 : fc::Basis::Q;
    const fc::ClassCountPolynomial r = fc::interpolate_class_counts(d, q_list, common.engine());
    const bool certified = fc::certify_integer_coefficients(r.poly);
    const std::vector<fc::Rational> coeffs =
        basis == fc::Basis::Q ? r.poly.coeffs : fc::rebase_q_minus_1(r.poly);

    if (common.output == "csv") {
        std::cout << "basis,power,num,den\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            std::cout << (basis == fc::Basis::Q ? "q" : "q-1") << ',' << i << ','
                      << numerator(coeffs[i]) << ',' << denominator(coeffs[i]) << '\n';
    } else if (common.output == "table") {
        std::cout << "d=(" << d.to_string() << ")\n";
        for (const auto& [q, k] : r.counts) std::cout << "  q=" << q << "  k(U)=" << k << '\n';
        std::cout << "k(U) = " << fc::format_polynomial(coeffs, basis) << '\n'
                  << "integer coefficients: " << (certified ? "yes" : "NO") << '\n';
        if (r.undersampled) std::cout << "UNDERSAMPLED: fewer than dim_u + 1 samples\n";
    } else {
        fc::Json counts = fc::Json::object();
        for (const auto& [q, k] : r.counts) counts[std::to_string(q)] = fc::big_to_json(k);
        fc::Json out{{"command", "interpolate"},
                     {"d", d.dims()},
                     {"dim_u", d.nilradical_dim()},
                     {"counts", std::move(counts)},
                     {"polynomial", fc::polynomial_to_json(r.poly, basis)},
                     {"display", fc::format_polynomial(coeffs, basis)},
                     {"undersampled", r.undersampled}};
        warn_scope(d, out);
        emit(out);
    }
    return certified ? kOk : kNotCertified;
}

int cmd_verify(const Common& common, const std::string& d_text, const std::string& assoc_text,
               const std::string& q_text) {
    const fc::DimensionVector d = fc::DimensionVector::parse(d_text);
    std::optional<fc::DimensionVector> assoc;
    if (!assoc_text.empty()) assoc = fc::DimensionVector::parse(assoc_text);
    auto q_list = q_text.empty() ? fc::default_q_schedule(d, common.cap) : parse_q_list(q_text);
    if (assoc && q_text.empty()) {
        const auto other = fc::default_q_schedule(*assoc, common.cap);
        std::erase_if(q_list, [&](std::uint64_t q) {
            return std::find(other.begin(), other.end(), q) == other.end();
        });
    }
    const fc::VerificationReport report = fc::run_verification(d, assoc, q_list, common.engine());
    const bool ok = report.all_pass();

    if (common.output == "csv") {
        std::cout << "check,pass,evidence\n";
        for (const auto& c : report.checks)
            std::cout << '"' << c.name << "\"," << (c.pass ? "true" : "false") << ",\""
                      << c.evidence << "\"\n";
    } else if (common.output == "table") {
        for (const auto& c : report.checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.evidence.empty() ? "" : "  -- " + c.evidence) << '\n';
        std::cout << (ok ? "all invariants pass" : "SOME INVARIANTS FAILED") << '\n';
    } else {
        fc::Json checks = fc::Json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"evidence", c.evidence}});
        fc::Json out{{"command", "verify"},
                     {"d", d.dims()},
                     {"q_list", q_list},
                     {"checks", std::move(checks)},
                     {"all_pass", ok}};
        if (report.association) {
            fc::Json rows = fc::Json::array();
            for (const auto& row : report.association->rows)
                rows.push_back({{"q", row.q},
                                {"k_PU", {row.k_PU_first, row.k_PU_second}},
                                {"k_U", {fc::big_to_json(row.k_U_first), fc::big_to_json(row.k_U_second)}}});
            out["association"] = {{"d_prime", report.association->second.dims()},
                                  {"k_PU_equal", report.association->k_PU_equal},
                                  {"k_U_differs", report.association->k_U_differs},
                                  {"rows", std::move(rows)}};
        }
        warn_scope(d, out);
        emit(out);
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_reps(const Common& common, const std::string& d_text, std::uint64_t q,
             std::optional<std::uint64_t> transfer_q) {
    const fc::DimensionVector d = fc::DimensionVector::parse(d_text);
    const fc::FlagContext ctx(d, fc::FiniteField::of_order(q));
    fc::OrbitPartition part = fc::partition_orbits(ctx, fc::ActingGroup::P, common.engine());
    fc::centralizer_orders(part, common.engine());
    const std::size_t missing = fc::find_zero_one_reps(part);

    std::optional<fc::TransferReport> transfer;
    std::string transfer_error;
    if (transfer_q) {
        const fc::FlagContext target(d, fc::FiniteField::of_order(*transfer_q));
        try {
            transfer = fc::transfer_reps(part, target, common.engine());
        } catch (const fc::VerificationFailed& e) {
            transfer_error = e.what();
        }
    }
    const int code = transfer_q && !transfer ? kVerifyFailed : kOk;

    if (common.output == "table" || common.output == "csv") {
        if (common.output == "csv") std::cout << "orbit,rep_index,zero_one_rep\n";
        for (std::size_t i = 0; i < part.records.size(); ++i) {
            const auto& r = part.records[i];
            std::string pattern = "none";
            if (r.zero_one_rep) pattern = fc::matrix_to_json(*r.zero_one_rep)["rows"].dump();
            if (common.output == "csv")
                std::cout << i << ',' << r.rep_index << ",\"" << pattern << "\"\n";
            else
                std::cout << "orbit " << i << ": " << pattern << '\n';
        }
        if (common.output == "table") {
            if (missing) std::cout << missing << " orbits without a 0/1 representative\n";
            if (transfer) std::cout << "transfer to q=" << *transfer_q << ": ok\n";
            if (!transfer_error.empty()) std::cout << "transfer FAILED: " << transfer_error << '\n';
            if (!d.finite_type()) std::cout << "warning: " << kScopeWarning << '\n';
        }
        return code;
    }

    fc::Json reps = fc::Json::array();
    for (const auto& r : part.records)
        reps.push_back(r.zero_one_rep ? fc::matrix_to_json(*r.zero_one_rep) : fc::Json());
    fc::Json out{{"command", "reps"},
                 {"context", fc::context_to_json(ctx)},
                 {"orbits", part.records.size()},
                 {"missing_zero_one", missing},
                 {"reps", std::move(reps)}};
    if (transfer_q) {
        fc::Json t{{"target_q", *transfer_q}, {"ok", transfer.has_value()}};
        if (transfer) {
            t["target_orbits"] = transfer->target_orbits;
            t["transferred"] = transfer->transferred;
        } else {
            t["error"] = transfer_error;
        }
        out["transfer"] = std::move(t);
    }
    warn_scope(d, out);
    emit(out);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjugacy class counts of unipotent radicals of parabolic subgroups of GL_n(q)"};
    app.require_subcommand(1);

    Common common;
    std::optional<std::uint64_t> cap_flag;
    app.add_option("--cap", cap_flag, "State-space cap on q^dim_u (env FLAGCLASS_CAP)")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", common.threads, "Worker threads (default: all cores)");
    app.add_option("--output", common.output, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    std::string d_text, assoc_text, q_list_text, basis = "q";
    std::uint64_t q = 0;
    std::optional<std::uint64_t> transfer_q;

    auto* count = app.add_subcommand("count", "Count conjugacy classes of U at one q");
    count->add_option("--d", d_text, "Dimension vector, e.g. 2,3,4")->required();
    count->add_option("--q", q, "Field order (prime power)")->required();

    auto* interp = app.add_subcommand("interpolate", "Interpolate k(U) as a polynomial in q");
    interp->add_option("--d", d_text, "Dimension vector")->required();
    interp->add_option("--q-list", q_list_text, "Comma list of field orders");
    interp->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"q", "q-1"}));

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--d", d_text, "Dimension vector")->required();
    verify->add_option("--assoc", assoc_text, "Associated dimension vector");
    verify->add_option("--q-list", q_list_text, "Comma list of field orders");

    auto* reps = app.add_subcommand("reps", "Emit 0/1 orbit representatives");
    reps->add_option("--d", d_text, "Dimension vector")->required();
    reps->add_option("--q", q, "Field order (prime power)")->required();
    reps->add_option("--transfer", transfer_q, "Re-verify the representatives over F_Q");

    for (auto* sub : {count, interp, verify, reps}) {
        sub->add_option("--cap", cap_flag, "State-space cap")->check(CLI::PositiveNumber);
        sub->add_option("--threads", common.threads, "Worker threads");
        sub->add_option("--output", common.output, "Output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        common.cap = cap_flag ? *cap_flag : cap_from_env();
        if (count->parsed()) {
            fc::prime_power_decomposition(q);
            return cmd_count(common, d_text, q);
        }
        if (interp->parsed()) return cmd_interpolate(common, d_text, q_list_text, basis);
        if (verify->parsed()) return cmd_verify(common, d_text, assoc_text, q_list_text);
        if (reps->parsed()) {
            fc::prime_power_decomposition(q);
            return cmd_reps(common, d_text, q, transfer_q);
        }
    } catch (const fc::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const fc::InternalInconsistency& e) {
        std::cerr << "error: internal inconsistency: " << e.what() << '\n';
        return kInconsistent;
    } catch (const fc::VerificationFailed& e) {
        std::cerr << "error: verification failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const fc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
