#include "flagclass/orbit.hpp"

#include "flagclass/errors.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <tuple>

namespace flagclass {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Splits [0, count) into contiguous chunks, one per worker, and runs
// fn(begin, end, worker) on each. Chunk boundaries depend only on count and
// the worker count, and callers merge per-worker results in worker order.
template <class Fn>
void parallel_ranges(std::uint64_t count, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(workers, count / 4096 + 1)));
    if (workers == 1) {
        fn(std::uint64_t{0}, count, 0u);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min(count, w * chunk);
        const std::uint64_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    }
    for (auto& t : pool) t.join();
}

std::vector<ElementaryGenerator> drop_identities(std::vector<ElementaryGenerator> gens) {
    std::erase_if(gens, [](const ElementaryGenerator& g) { return g.is_identity(); });
    return gens;
}

// Breadth-first closure of `seed` under `gens`. Newly reached indices are
// appended to `queue`; `visited(i)` marks i and reports whether it was new.
// All images of one state are computed and prefetched before any lookup.
template <class Visited, class Prefetch>
void close_orbit(const FlagContext& ctx, const std::vector<ElementaryGenerator>& gens,
                 std::uint64_t seed, std::vector<std::uint64_t>& queue, Visited&& visited,
                 Prefetch&& prefetch,
                 std::vector<Elem>& base, std::vector<Elem>& work) {
    const std::size_t n = ctx.n();
    const FiniteField& f = ctx.field();
    queue.clear();
    queue.push_back(seed);
    visited(seed);
    std::vector<std::uint64_t> images(gens.size());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::fill(base.begin(), base.end(), Elem{0});
        ctx.decode_into(queue[head], base);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::copy(base.begin(), base.end(), work.begin());
            gens[i].conjugate(work, n, f);
            images[i] = ctx.encode_index(work);
            prefetch(images[i]);
        }
        for (const std::uint64_t image : images)
            if (visited(image)) queue.push_back(image);
    }
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

MatrixFq adjoint_act(const FlagContext& ctx, const MatrixFq& g, const MatrixFq& x) {
    if (!ctx.in_P(g)) throw MembershipViolation("g is not in P(d)");
    if (!ctx.in_nilradical(x)) throw MembershipViolation("x is not in u(d)");
    MatrixFq y = g * x * *g.try_inverse();
    if (!ctx.in_nilradical(y)) throw MembershipViolation("g x g^-1 left u(d)");
    return y;
}

MatrixFq unipotent_bijection(const FlagContext& ctx, const MatrixFq& x) {
    if (!ctx.in_nilradical(x)) throw MembershipViolation("x is not in u(d)");
    return MatrixFq::identity(ctx.field(), ctx.n()) + x;
}

MatrixFq unipotent_bijection_inverse(const FlagContext& ctx, const MatrixFq& u) {
    if (!ctx.in_U(u)) throw MembershipViolation("u is not in U(d)");
    return u - MatrixFq::identity(ctx.field(), ctx.n());
}

unsigned ad_nullity(const FlagContext& ctx, std::span<const Elem> x, std::span<Elem> ad) {
    const auto& cross = ctx.cross_positions();
    const std::size_t m = cross.size();
    const unsigned n = ctx.n();
    const FiniteField& f = ctx.field();
    std::fill(ad.begin(), ad.begin() + static_cast<std::ptrdiff_t>(m * m), Elem{0});
    // Column j holds [x, E_rs] = x E_rs - E_rs x projected onto cross positions.
    for (std::size_t j = 0; j < m; ++j) {
        const unsigned r = cross[j].row;
        const unsigned s = cross[j].col;
        for (unsigned i = 0; i < n; ++i) {
            const Elem v = x[i * n + r];
            if (v == 0) continue;
            const int row = ctx.cross_index(i, s);
            if (row >= 0) ad[row * m + j] = f.add(ad[row * m + j], v);
        }
        for (unsigned c = 0; c < n; ++c) {
            const Elem v = x[s * n + c];
            if (v == 0) continue;
            const int row = ctx.cross_index(r, c);
            if (row >= 0) ad[row * m + j] = f.sub(ad[row * m + j], v);
        }
    }
    return static_cast<unsigned>(m - rank_in_place(ad.first(m * m), m, m, f));
}

OrbitPartition partition_orbits(const FlagContext& ctx, ActingGroup group,
                                const EngineOptions& options) {
    const std::uint64_t count = ctx.checked_state_count(options.cap);
    OrbitPartition part{ctx, group, ctx.group_orders(), {}, {}, 0, false};
    part.labels.assign(count, kUnvisited);

    const auto gens = drop_identities(group == ActingGroup::P ? ctx.elementary_generators_P(false)
                                                              : ctx.elementary_generators_U());
    const auto u_gens = drop_identities(ctx.elementary_generators_U());
    const std::size_t nn = std::size_t{ctx.n()} * ctx.n();
    std::vector<Elem> base(nn), work(nn);
    std::vector<std::uint64_t> queue;
    std::vector<std::uint32_t> u_stamp;
    if (group == ActingGroup::P) u_stamp.assign(count, kUnvisited);

    for (std::uint64_t seed = 0; seed < count; ++seed) {
        if (part.labels[seed] != kUnvisited) continue;
        const auto label = static_cast<std::uint32_t>(part.records.size());
        auto& labels = part.labels;
        close_orbit(ctx, gens, seed, queue, [&](std::uint64_t i) {
            if (labels[i] != kUnvisited) return false;
            labels[i] = label;
            return true;
        }, [&](std::uint64_t i) { __builtin_prefetch(&labels[i]); }, base, work);

        OrbitRecord rec{ctx.matrix_at(seed), seed, std::nullopt};
        rec.orbit_size = queue.size();
        if (group == ActingGroup::P) {
            close_orbit(ctx, u_gens, seed, queue, [&](std::uint64_t i) {
                if (u_stamp[i] == label) return false;
                u_stamp[i] = label;
                return true;
            }, [&](std::uint64_t i) { __builtin_prefetch(&u_stamp[i]); }, base, work);
            rec.u_orbit_size = queue.size();
        } else {
            rec.u_orbit_size = rec.orbit_size;
        }
        part.total += rec.orbit_size;
        part.records.push_back(std::move(rec));
    }
    return part;
}

void centralizer_orders(OrbitPartition& part, const EngineOptions& options) {
    const FlagContext& ctx = part.ctx;
    const std::uint64_t q = ctx.field().q();
    const BigInt& order_group = part.group == ActingGroup::P ? part.orders.order_P
                                                             : part.orders.order_U;
    const std::size_t m = ctx.cross_positions().size();
    std::vector<unsigned> nullities(part.records.size());
    parallel_ranges(part.records.size(), resolve_threads(options.threads),
                    [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                        std::vector<Elem> scratch(m * m);
                        for (std::uint64_t i = begin; i < end; ++i)
                            nullities[i] = ad_nullity(ctx, part.records[i].rep.entries(), scratch);
                    });

    for (std::size_t i = 0; i < part.records.size(); ++i) {
        OrbitRecord& rec = part.records[i];
        if (order_group % rec.orbit_size != 0 || part.orders.order_U % rec.u_orbit_size != 0 ||
            rec.orbit_size % rec.u_orbit_size != 0)
            throw InternalInconsistency("orbit sizes do not divide group orders at rep index " +
                                        std::to_string(rec.rep_index));
        rec.c_P_order = order_group / rec.orbit_size;
        rec.c_U_order = static_cast<std::uint64_t>(part.orders.order_U / rec.u_orbit_size);
        rec.u_suborbit_count = rec.orbit_size / rec.u_orbit_size;
        const BigInt via_kernel = big_pow(q, nullities[i]);
        if (via_kernel != rec.c_U_order)
            throw InternalInconsistency("|C_U(x)| mismatch at rep index " +
                                        std::to_string(rec.rep_index) + ": orbit-stabilizer " +
                                        std::to_string(rec.c_U_order) + " vs ad-kernel " +
                                        via_kernel.str());
        rec.delta_prime = nullities[i];
    }
    part.centralizers_filled = true;
}

std::vector<std::uint64_t> nullity_histogram(const FlagContext& ctx,
                                             const EngineOptions& options) {
    const std::uint64_t count = ctx.checked_state_count(options.cap);
    const std::size_t m = ctx.cross_positions().size();
    const unsigned workers = resolve_threads(options.threads);
    std::vector<std::vector<std::uint64_t>> partial(workers,
                                                    std::vector<std::uint64_t>(m + 1, 0));
    parallel_ranges(count, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        std::vector<Elem> x(std::size_t{ctx.n()} * ctx.n(), 0);
        std::vector<Elem> scratch(m * m);
        auto& hist = partial[w];
        for (std::uint64_t i = begin; i < end; ++i) {
            ctx.decode_into(i, x);
            ++hist[ad_nullity(ctx, x, scratch)];
        }
    });
    std::vector<std::uint64_t> hist(m + 1, 0);
    for (const auto& h : partial)
        for (std::size_t e = 0; e <= m; ++e) hist[e] += h[e];
    return hist;
}

ClassCounts count_classes(const OrbitPartition& part, const EngineOptions& options) {
    if (part.group != ActingGroup::P) throw InvalidArgument("count_classes needs a P-partition");
    if (!part.centralizers_filled) throw InvalidArgument("centralizer orders not computed");
    const FlagContext& ctx = part.ctx;
    const std::uint64_t q = ctx.field().q();

    ClassCounts out;
    out.k_PU = part.records.size();
    out.via_orbit_ratio = 0;
    out.via_centralizers = 0;
    for (const auto& rec : part.records) {
        out.per_orbit.push_back(rec.u_suborbit_count);
        out.via_orbit_ratio += rec.orbit_size / rec.u_orbit_size;
        out.via_centralizers += Rational(BigInt(rec.c_U_order), rec.c_P_order);
    }
    out.via_centralizers *= part.orders.order_L;

    const auto hist = nullity_histogram(ctx, options);
    out.commuting_pairs = 0;
    for (std::size_t e = 0; e < hist.size(); ++e)
        out.commuting_pairs += BigInt(hist[e]) * big_pow(q, static_cast<unsigned>(e));
    if (out.commuting_pairs % part.orders.order_U != 0)
        throw InternalInconsistency("Burnside sum " + out.commuting_pairs.str() +
                                    " is not divisible by |U|");
    out.via_burnside = out.commuting_pairs / part.orders.order_U;

    if (denominator(out.via_centralizers) != 1)
        throw InternalInconsistency("|L| sum |C_U|/|C_P| is not an integer: " +
                                    out.via_centralizers.str());
    const BigInt via_centralizers = numerator(out.via_centralizers);
    if (out.via_orbit_ratio != via_centralizers || out.via_orbit_ratio != out.via_burnside)
        throw InternalInconsistency("k(U) routes disagree for d=(" + ctx.dims().to_string() +
                                    "), q=" + std::to_string(q) + ": orbit ratio " +
                                    out.via_orbit_ratio.str() + ", centralizers " +
                                    via_centralizers.str() + ", Burnside " +
                                    out.via_burnside.str());
    out.k_U = out.via_orbit_ratio;
    return out;
}

ClassCounts count_classes(const FlagContext& ctx, const EngineOptions& options) {
    OrbitPartition part = partition_orbits(ctx, ActingGroup::P, options);
    centralizer_orders(part, options);
    return count_classes(part, options);
}

BigInt commuting_pairs(const FlagContext& ctx, const EngineOptions& options) {
    const ClassCounts counts = count_classes(ctx, options);
    const BigInt expected = ctx.group_orders().order_U * counts.k_U;
    if (counts.commuting_pairs != expected)
        throw InternalInconsistency("|C(U)| = " + counts.commuting_pairs.str() +
                                    " differs from |U| k(U) = " + expected.str());
    return counts.commuting_pairs;
}

std::size_t find_zero_one_reps(OrbitPartition& part) {
    const FlagContext& ctx = part.ctx;
    const std::size_t m = ctx.cross_positions().size();
    const std::uint64_t q = ctx.field().q();
    std::size_t missing = part.records.size();
    for (auto& rec : part.records) rec.zero_one_rep.reset();

    // Patterns in enumeration order: bit m-1-j of `bits` is the entry at
    // cross position j, so increasing bits is increasing index.
    const std::uint64_t patterns = m >= 64 ? 0 : (std::uint64_t{1} << m);
    for (std::uint64_t bits = 0; bits < patterns && missing > 0; ++bits) {
        std::uint64_t index = 0;
        for (std::size_t j = 0; j < m; ++j) index = index * q + ((bits >> (m - 1 - j)) & 1u);
        OrbitRecord& rec = part.records[part.labels[index]];
        if (!rec.zero_one_rep) {
            rec.zero_one_rep = ctx.matrix_at(index);
            --missing;
        }
    }
    return missing;
}

TransferReport transfer_reps(const OrbitPartition& source, const OrbitPartition& target) {
    if (!(source.ctx.dims() == target.ctx.dims()))
        throw InvalidArgument("transfer_reps needs the same dimension vector on both sides");
    TransferReport report;
    report.source_q = source.ctx.field().q();
    report.target_q = target.ctx.field().q();
    report.source_orbits = source.records.size();
    report.target_orbits = target.records.size();

    std::vector<std::size_t> owner(target.records.size(), source.records.size());
    for (std::size_t i = 0; i < source.records.size(); ++i) {
        const auto& rec = source.records[i];
        if (!rec.zero_one_rep)
            throw VerificationFailed("source orbit " + std::to_string(i) +
                                     " has no 0/1 representative");
        std::vector<Elem> entries(rec.zero_one_rep->entries().begin(),
                                  rec.zero_one_rep->entries().end());
        const MatrixFq moved(target.ctx.field(), target.ctx.n(), std::move(entries));
        const std::size_t hit = target.orbit_of(moved);
        if (owner[hit] != source.records.size())
            throw VerificationFailed("0/1 representatives of source orbits " +
                                     std::to_string(owner[hit]) + " and " + std::to_string(i) +
                                     " are conjugate over F_" + std::to_string(report.target_q));
        owner[hit] = i;
        ++report.transferred;
    }
    for (std::size_t j = 0; j < owner.size(); ++j)
        if (owner[j] == source.records.size())
            throw VerificationFailed("target orbit " + std::to_string(j) + " over F_" +
                                     std::to_string(report.target_q) +
                                     " is not hit by any transferred representative");
    report.ok = true;
    return report;
}

TransferReport transfer_reps(const OrbitPartition& source, const FlagContext& target,
                             const EngineOptions& options) {
    return transfer_reps(source, partition_orbits(target, ActingGroup::P, options));
}

std::optional<unsigned> exact_log(const BigInt& value, std::uint64_t q) {
    if (value <= 0 || q < 2) return std::nullopt;
    BigInt rest = value;
    unsigned e = 0;
    while (rest % q == 0) {
        rest /= q;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return e;
}

namespace {

void partitions_with_parts_at_most(unsigned total, unsigned max_part, std::vector<unsigned>& cur,
                                   std::vector<std::vector<unsigned>>& out) {
    if (total == 0) {
        std::vector<unsigned> sorted(cur.rbegin(), cur.rend());
        out.push_back(std::move(sorted));
        return;
    }
    for (unsigned part = std::min(total, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_with_parts_at_most(total - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

LeviFit fit_levi_form(const std::map<std::uint64_t, BigInt>& c_P_orders, unsigned n,
                      unsigned dim_u) {
    if (c_P_orders.size() < 3)
        throw InvalidArgument("fit_levi_form needs at least three sampled q values");
    std::vector<std::vector<unsigned>> candidates;
    std::vector<unsigned> cur;
    for (unsigned total = 0; total <= n; ++total)
        partitions_with_parts_at_most(total, total, cur, candidates);

    const unsigned max_delta = dim_u + n * n;
    LeviFit fit;
    for (const auto& multiset : candidates) {
        std::optional<unsigned> delta;
        bool ok = true;
        for (const auto& [q, order] : c_P_orders) {
            BigInt levi = 1;
            for (unsigned part : multiset) levi *= gl_order(part, q);
            if (order % levi != 0) {
                ok = false;
                break;
            }
            const auto e = exact_log(order / levi, q);
            if (!e || *e > max_delta || (delta && *delta != *e)) {
                ok = false;
                break;
            }
            delta = e;
        }
        if (ok) fit.all_fits.emplace_back(multiset, *delta);
    }
    if (fit.all_fits.empty()) throw NoFit("no (multiset, delta) reproduces the centralizer orders");
    std::sort(fit.all_fits.begin(), fit.all_fits.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.second, a.first) < std::tie(b.second, b.first);
              });
    fit.multiplicities = fit.all_fits.front().first;
    fit.delta = fit.all_fits.front().second;
    return fit;
}

AssociationReport verify_association(const DimensionVector& first, const DimensionVector& second,
                                     const std::vector<std::uint64_t>& q_list,
                                     const EngineOptions& options) {
    if (first.n() != second.n() || first.block_multiset() != second.block_multiset())
        throw NotAssociated("(" + first.to_string() + ") and (" + second.to_string() +
                            ") have different block multisets");
    AssociationReport report{first, second, {}, true, false};
    for (std::uint64_t q : q_list) {
        const FiniteField field = FiniteField::of_order(q);
        const ClassCounts a = count_classes(FlagContext(first, field), options);
        const ClassCounts b = count_classes(FlagContext(second, field), options);
        report.rows.push_back({q, a.k_PU, b.k_PU, a.k_U, b.k_U});
        if (a.k_PU != b.k_PU) report.k_PU_equal = false;
        if (a.k_U != b.k_U) report.k_U_differs = true;
    }
    return report;
}

}  // namespace flagclass
