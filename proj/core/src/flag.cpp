#include "flagclass/flag.hpp"

#include "flagclass/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace flagclass {

DimensionVector::DimensionVector(std::vector<unsigned> d) : d_(std::move(d)) {
    if (d_.empty()) throw InvalidArgument("dimension vector must be non-empty");
    unsigned prev = 0;
    for (unsigned di : d_) {
        if (di < prev) throw InvalidArgument("dimension vector must be weakly increasing");
        b_.push_back(di - prev);
        prev = di;
    }
    if (d_.back() == 0) throw InvalidArgument("ambient dimension n = d_t must be positive");
}

DimensionVector DimensionVector::parse(std::string_view text) {
    std::vector<unsigned> d;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw InvalidArgument("bad dimension vector '" + std::string(text) + "'");
        d.push_back(value);
        pos = comma + 1;
    }
    return DimensionVector(std::move(d));
}

unsigned DimensionVector::nilradical_dim() const {
    unsigned dim = 0;
    for (std::size_t i = 0; i < b_.size(); ++i)
        for (std::size_t j = i + 1; j < b_.size(); ++j) dim += b_[i] * b_[j];
    return dim;
}

std::vector<unsigned> DimensionVector::block_multiset() const {
    std::vector<unsigned> m;
    for (unsigned b : b_)
        if (b > 0) m.push_back(b);
    std::sort(m.begin(), m.end());
    return m;
}

std::string DimensionVector::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < d_.size(); ++i) out << (i ? "," : "") << d_[i];
    return out.str();
}

BigInt gl_order(unsigned m, std::uint64_t q) {
    const BigInt qm = big_pow(q, m);
    BigInt order = 1;
    BigInt qi = 1;
    for (unsigned i = 0; i < m; ++i) {
        order *= qm - qi;
        qi *= q;
    }
    return order;
}

// --- ElementaryGenerator ---------------------------------------------------

namespace {

unsigned cycle_image(unsigned j, unsigned start, unsigned len, bool reverse) {
    const unsigned off = j - start;
    return start + (reverse ? (off + len - 1) % len : (off + 1) % len);
}

}  // namespace

MatrixFq ElementaryGenerator::matrix(const FiniteField& field, std::size_t n) const {
    MatrixFq g = MatrixFq::identity(field, n);
    switch (kind) {
    case Kind::Torus:
        g(a, a) = scalar;
        break;
    case Kind::Transvection:
        g(a, b) = field.add(g(a, b), scalar);
        break;
    case Kind::BlockCycle:
        for (unsigned j = a; j < a + b; ++j) g(j, j) = 0;
        for (unsigned j = a; j < a + b; ++j) g(cycle_image(j, a, b, reverse), j) = 1;
        break;
    }
    return g;
}

ElementaryGenerator ElementaryGenerator::inverse(const FiniteField& field) const {
    ElementaryGenerator g = *this;
    switch (kind) {
    case Kind::Torus:
        g.scalar = field.inv(scalar);
        break;
    case Kind::Transvection:
        g.scalar = field.neg(scalar);
        break;
    case Kind::BlockCycle:
        g.reverse = !reverse;
        break;
    }
    return g;
}

bool ElementaryGenerator::is_identity() const {
    switch (kind) {
    case Kind::Torus:
        return scalar == 1;
    case Kind::Transvection:
        return scalar == 0;
    case Kind::BlockCycle:
        return b <= 1;
    }
    return false;
}

void ElementaryGenerator::conjugate(std::span<Elem> x, std::size_t n,
                                    const FiniteField& f) const {
    switch (kind) {
    case Kind::Torus: {
        const Elem inv = f.inv(scalar);
        for (std::size_t j = 0; j < n; ++j) x[a * n + j] = f.mul(scalar, x[a * n + j]);
        for (std::size_t i = 0; i < n; ++i) x[i * n + a] = f.mul(x[i * n + a], inv);
        break;
    }
    case Kind::Transvection: {
        // (1 + sE_ab) x (1 - sE_ab): row a += s row b, then col b -= s col a.
        for (std::size_t j = 0; j < n; ++j)
            x[a * n + j] = f.add(x[a * n + j], f.mul(scalar, x[b * n + j]));
        const Elem minus = f.neg(scalar);
        for (std::size_t i = 0; i < n; ++i)
            x[i * n + b] = f.add(x[i * n + b], f.mul(minus, x[i * n + a]));
        break;
    }
    case Kind::BlockCycle: {
        // (Pi x Pi^{-1})(sigma i, sigma j) = x(i, j); permute rows, then columns.
        Elem tmp[64];
        const unsigned len = b;
        Elem* buf = tmp;
        std::vector<Elem> heap;
        if (len > 64) {
            heap.resize(len);
            buf = heap.data();
        }
        for (std::size_t col = 0; col < n; ++col) {
            for (unsigned j = a; j < a + len; ++j) buf[cycle_image(j, a, len, reverse) - a] = x[j * n + col];
            for (unsigned j = 0; j < len; ++j) x[(a + j) * n + col] = buf[j];
        }
        for (std::size_t row = 0; row < n; ++row) {
            for (unsigned j = a; j < a + len; ++j) buf[cycle_image(j, a, len, reverse) - a] = x[row * n + j];
            for (unsigned j = 0; j < len; ++j) x[row * n + a + j] = buf[j];
        }
        break;
    }
    }
}

// --- FlagContext -------------------------------------------------------------

FlagContext::FlagContext(DimensionVector dv, FiniteField field)
    : dv_(std::move(dv)), field_(std::move(field)) {
    const unsigned n = dv_.n();
    block_of_.resize(n);
    unsigned col = 0;
    for (unsigned i = 0; i < dv_.blocks().size(); ++i) {
        block_start_.push_back(col);
        for (unsigned j = 0; j < dv_.blocks()[i]; ++j) block_of_[col++] = i;
    }
    cross_index_.assign(std::size_t{n} * n, -1);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s) {
            if (block_of_[r] < block_of_[s]) {
                cross_index_[r * n + s] = static_cast<int>(cross_.size());
                cross_.push_back({r, s});
            } else if (block_of_[r] == block_of_[s]) {
                levi_.push_back({r, s});
            }
        }
}

void FlagContext::require_size(const MatrixFq& m) const {
    if (m.n() != n())
        throw DimensionMismatch("expected a " + std::to_string(n()) + "x" + std::to_string(n()) +
                                " matrix, got size " + std::to_string(m.n()));
    if (!(m.field() == field_)) throw DimensionMismatch("matrix over a different field");
}

bool FlagContext::in_nilradical(const MatrixFq& x) const {
    require_size(x);
    for (unsigned r = 0; r < n(); ++r)
        for (unsigned s = 0; s < n(); ++s)
            if (x(r, s) != 0 && cross_index(r, s) < 0) return false;
    return true;
}

bool FlagContext::in_P(const MatrixFq& g) const {
    require_size(g);
    for (unsigned r = 0; r < n(); ++r)
        for (unsigned s = 0; s < n(); ++s)
            if (g(r, s) != 0 && block_of_[r] > block_of_[s]) return false;
    return g.rank() == n();
}

bool FlagContext::in_U(const MatrixFq& g) const {
    require_size(g);
    return in_nilradical(g - MatrixFq::identity(field_, n()));
}

GroupOrders FlagContext::group_orders() const {
    GroupOrders o;
    o.dim_u = dv_.nilradical_dim();
    o.order_U = big_pow(field_.q(), o.dim_u);
    o.order_L = 1;
    for (unsigned b : dv_.blocks()) o.order_L *= gl_order(b, field_.q());
    o.order_P = o.order_L * o.order_U;
    return o;
}

std::vector<ElementaryGenerator> FlagContext::elementary_generators_P(bool with_inverses) const {
    using Kind = ElementaryGenerator::Kind;
    std::vector<ElementaryGenerator> forward;
    const Elem lambda = field_.primitive_element();
    const auto& blocks = dv_.blocks();
    for (unsigned i = 0; i < blocks.size(); ++i) {
        const unsigned c = block_start_[i];
        if (blocks[i] >= 1) forward.push_back({Kind::Torus, c, 0, lambda, false});
        if (blocks[i] >= 2) {
            forward.push_back({Kind::Transvection, c, c + 1, 1, false});
            forward.push_back({Kind::BlockCycle, c, blocks[i], 0, false});
        }
    }
    // Transvections between each nonempty block and the next nonempty one.
    for (const Position& pos : cross_) {
        const unsigned br = block_of_[pos.row];
        unsigned next = br + 1;
        while (next < blocks.size() && blocks[next] == 0) ++next;
        if (block_of_[pos.col] == next)
            forward.push_back({Kind::Transvection, pos.row, pos.col, 1, false});
    }

    std::vector<ElementaryGenerator> gens;
    std::vector<MatrixFq> seen;
    auto add = [&](const ElementaryGenerator& g) {
        MatrixFq m = g.matrix(field_, n());
        if (std::find(seen.begin(), seen.end(), m) != seen.end()) return;
        seen.push_back(std::move(m));
        gens.push_back(g);
    };
    for (const auto& g : forward) {
        add(g);
        if (with_inverses) add(g.inverse(field_));
    }
    return gens;
}

std::vector<MatrixFq> FlagContext::generators_P() const {
    std::vector<MatrixFq> out;
    for (const auto& g : elementary_generators_P()) out.push_back(g.matrix(field_, n()));
    return out;
}

std::vector<ElementaryGenerator> FlagContext::elementary_generators_U() const {
    std::vector<ElementaryGenerator> gens;
    for (const Position& pos : cross_)
        for (unsigned i = 0; i < field_.k(); ++i)
            gens.push_back({ElementaryGenerator::Kind::Transvection, pos.row, pos.col,
                            field_.basis_element(i), false});
    return gens;
}

BigInt FlagContext::state_count() const {
    return big_pow(field_.q(), dv_.nilradical_dim());
}

std::uint64_t FlagContext::checked_state_count(std::uint64_t cap) const {
    const BigInt count = state_count();
    if (count > cap)
        throw CapExceeded("state space q^dim_u = " + count.str() + " for d=(" + dv_.to_string() +
                          "), q=" + std::to_string(field_.q()) + " exceeds cap " +
                          std::to_string(cap));
    return static_cast<std::uint64_t>(count);
}

NilradicalRange FlagContext::enumerate_nilradical(std::uint64_t cap) const {
    return {this, checked_state_count(cap)};
}

void FlagContext::decode_into(std::uint64_t index, std::span<Elem> out) const {
    const unsigned q = field_.q();
    for (std::size_t j = cross_.size(); j-- > 0;) {
        out[cross_[j].row * n() + cross_[j].col] = static_cast<Elem>(index % q);
        index /= q;
    }
}

std::uint64_t FlagContext::encode_index(std::span<const Elem> x) const {
    const unsigned q = field_.q();
    std::uint64_t index = 0;
    for (const Position& pos : cross_) index = index * q + x[pos.row * n() + pos.col];
    return index;
}

MatrixFq FlagContext::matrix_at(std::uint64_t index) const {
    MatrixFq x(field_, n());
    decode_into(index, x.entries());
    return x;
}

std::uint64_t FlagContext::index_of(const MatrixFq& x) const {
    if (!in_nilradical(x)) throw MembershipViolation("matrix is not in u(d)");
    return encode_index(x.entries());
}

MatrixFq NilradicalRange::iterator::operator*() const { return ctx_->matrix_at(index_); }

}  // namespace flagclass
