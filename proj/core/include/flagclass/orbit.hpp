#pragma once

#include "flagclass/bigint.hpp"
#include "flagclass/flag.hpp"
#include "flagclass/matfq.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagclass {

enum class ActingGroup { P, U };

struct EngineOptions {
    std::uint64_t cap = kDefaultStateCap;
    /// Worker count for the data-parallel passes; 0 means hardware concurrency.
    unsigned threads = 0;
};

unsigned resolve_threads(unsigned requested);

/// One adjoint orbit in u(d).
struct OrbitRecord {
    MatrixFq rep;                          // least element in enumeration order
    std::uint64_t rep_index = 0;
    std::optional<MatrixFq> zero_one_rep;  // least 0/1 pattern in the orbit, if any
    std::uint64_t orbit_size = 0;          // |G.x|
    std::uint64_t u_orbit_size = 0;        // |U.x|
    BigInt c_P_order = 0;                  // |C_P(x)| = |P| / |P.x|
    std::uint64_t c_U_order = 0;           // |C_U(x)| = |U| / |U.x|
    std::uint64_t u_suborbit_count = 0;    // |P.x| / |U.x|
    unsigned delta_prime = 0;              // |C_U(x)| = q^delta_prime
};

struct OrbitPartition {
    FlagContext ctx;
    ActingGroup group = ActingGroup::P;
    GroupOrders orders;
    std::vector<OrbitRecord> records;
    /// labels[i] = record index of the orbit containing enumeration index i.
    std::vector<std::uint32_t> labels;
    std::uint64_t total = 0;
    bool centralizers_filled = false;

    std::size_t orbit_of(std::uint64_t index) const { return labels[index]; }
    std::size_t orbit_of(const MatrixFq& x) const { return labels[ctx.index_of(x)]; }
};

/// g x g^{-1}. Throws MembershipViolation unless g is in P(d) and x in u(d).
MatrixFq adjoint_act(const FlagContext& ctx, const MatrixFq& g, const MatrixFq& x);

/// x -> 1 + x from u(d) onto U(d), and its inverse u -> u - 1.
MatrixFq unipotent_bijection(const FlagContext& ctx, const MatrixFq& x);
MatrixFq unipotent_bijection_inverse(const FlagContext& ctx, const MatrixFq& u);

/// Dimension of the kernel of y -> xy - yx on u(d), computed in the
/// cross-position basis. `scratch` must hold dim_u^2 entries.
unsigned ad_nullity(const FlagContext& ctx, std::span<const Elem> x, std::span<Elem> scratch);

/// Partitions u(d) into orbits of P(d) or U(d) by breadth-first closure
/// under the group's generators, seeding from the least unvisited element.
/// Records come out sorted by representative; for group P the U-orbit size
/// of each representative is filled in too.
OrbitPartition partition_orbits(const FlagContext& ctx, ActingGroup group,
                                const EngineOptions& options = {});

/// Fills c_P_order, c_U_order, u_suborbit_count and delta_prime. c_U_order
/// is computed from orbit-stabilizer and from the ad-kernel and the two
/// must agree (InternalInconsistency otherwise).
void centralizer_orders(OrbitPartition& partition, const EngineOptions& options = {});

/// Histogram of ad_x nullities over all of u(d): entry e counts the x with
/// |C_U(x)| = q^e.
std::vector<std::uint64_t> nullity_histogram(const FlagContext& ctx,
                                             const EngineOptions& options = {});

struct ClassCounts {
    BigInt k_U;
    std::uint64_t k_PU = 0;
    std::vector<std::uint64_t> per_orbit;  // u_suborbit_count per P-orbit
    BigInt via_orbit_ratio;                // sum |P.x| / |U.x|
    Rational via_centralizers;             // |L| sum |C_U(x)| / |C_P(x)|
    BigInt via_burnside;                   // q^{-dim u} sum_x q^{nullity(ad_x)}
    BigInt commuting_pairs;                // sum_x |C_U(x)|
};

/// k(U) by three independent routes; throws InternalInconsistency when any
/// two disagree or a route fails to be integral.
ClassCounts count_classes(const OrbitPartition& partition, const EngineOptions& options = {});
ClassCounts count_classes(const FlagContext& ctx, const EngineOptions& options = {});

/// |C(U)| = sum_{x in U} |C_U(x)|, checked against |U| k(U).
BigInt commuting_pairs(const FlagContext& ctx, const EngineOptions& options = {});

/// Assigns to every orbit the least 0/1 pattern it contains. Returns the
/// number of orbits left without one (only possible for flags longer than 5).
std::size_t find_zero_one_reps(OrbitPartition& partition);

struct TransferReport {
    std::uint64_t source_q = 0;
    std::uint64_t target_q = 0;
    std::size_t source_orbits = 0;
    std::size_t target_orbits = 0;
    std::size_t transferred = 0;
    bool ok = false;
};

/// Re-reads the 0/1 representatives of `source` over the field of `target`
/// and checks they are pairwise non-conjugate and hit every target orbit.
/// Throws VerificationFailed naming the offending pair or orbit.
TransferReport transfer_reps(const OrbitPartition& source, const OrbitPartition& target);
TransferReport transfer_reps(const OrbitPartition& source, const FlagContext& target,
                             const EngineOptions& options = {});

struct LeviFit {
    std::vector<unsigned> multiplicities;  // sorted, positive parts
    unsigned delta = 0;
    std::vector<std::pair<std::vector<unsigned>, unsigned>> all_fits;
    bool ambiguous() const { return all_fits.size() > 1; }
};

/// Finds every multiset {n_i} with sum n_i <= n and delta in [0, dim_u + n^2]
/// such that prod |GL_{n_i}(q)| q^delta equals the observed |C_P(x)| at all
/// sampled q. Requires at least three distinct q; throws NoFit when nothing
/// matches. The reported primary fit is the least by (delta, multiset).
LeviFit fit_levi_form(const std::map<std::uint64_t, BigInt>& c_P_orders, unsigned n,
                      unsigned dim_u);

/// Exponent e with value = q^e, if any.
std::optional<unsigned> exact_log(const BigInt& value, std::uint64_t q);

struct AssociationRow {
    std::uint64_t q = 0;
    std::uint64_t k_PU_first = 0;
    std::uint64_t k_PU_second = 0;
    BigInt k_U_first;
    BigInt k_U_second;
};

struct AssociationReport {
    DimensionVector first;
    DimensionVector second;
    std::vector<AssociationRow> rows;
    bool k_PU_equal = true;
    bool k_U_differs = false;
};

/// Throws NotAssociated unless d and d' have the same n and the same
/// multiset of nonzero block sizes.
AssociationReport verify_association(const DimensionVector& first, const DimensionVector& second,
                                     const std::vector<std::uint64_t>& q_list,
                                     const EngineOptions& options = {});

}  // namespace flagclass
