#pragma once

#include "flagclass/flag.hpp"
#include "flagclass/orbit.hpp"
#include "flagclass/polyq.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagclass {

/// Field orders sampled by default; 4, 8 and 9 separate polynomials in q
/// from polynomials in p.
inline const std::vector<std::uint64_t> kDefaultQSchedule{2, 3, 4, 5, 7, 8, 9};

/// The default schedule restricted to q with q^{dim u} <= cap.
std::vector<std::uint64_t> default_q_schedule(const DimensionVector& d,
                                              std::uint64_t cap = kDefaultStateCap);

/// Full P-orbit analysis at one (d, q): partition, centralizers, 0/1
/// representatives and the cross-checked class counts.
struct Analysis {
    OrbitPartition partition;
    ClassCounts counts;
    std::size_t missing_zero_one = 0;
};

Analysis analyze(const FlagContext& ctx, const EngineOptions& options = {});

struct ClassCountPolynomial {
    RationalPolynomial poly;
    std::map<std::uint64_t, BigInt> counts;
    /// Fewer than dim u + 1 samples, so the degree bound does not pin the
    /// polynomial down.
    bool undersampled = false;
};

ClassCountPolynomial interpolate_class_counts(const DimensionVector& d,
                                              const std::vector<std::uint64_t>& q_list,
                                              const EngineOptions& options = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string evidence;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::optional<AssociationReport> association;
    bool all_pass() const;
};

/// Runs the invariant suite over every q in q_list: orbit coverage,
/// cross-method class counts, centralizer shapes, 0/1 representatives and
/// their transfer, q-independence of the orbit count (flags of length <= 5),
/// Levi fits, integrality of the interpolant and, when `assoc` is given,
/// equality of k(P,U) for the associated flag. CapExceeded propagates.
VerificationReport run_verification(const DimensionVector& d,
                                    const std::optional<DimensionVector>& assoc,
                                    const std::vector<std::uint64_t>& q_list,
                                    const EngineOptions& options = {});

}  // namespace flagclass
