#pragma once

#include "flagclass/bigint.hpp"
#include "flagclass/gf.hpp"
#include "flagclass/matfq.hpp"

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagclass {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 24;

/// Flag lengths up to this bound are of finite orbit type.
inline constexpr std::size_t kFiniteTypeMaxLength = 5;

/// Dimension vector d = (d_1, ..., d_t) of the flag K^{d_1} <= ... <= K^{d_t}
/// with d_t = n, together with the block sizes b_i = d_i - d_{i-1}.
class DimensionVector {
public:
    /// Throws InvalidArgument when d is empty, decreasing somewhere, or n = 0.
    explicit DimensionVector(std::vector<unsigned> d);
    /// Parses a comma list such as "2,3,4".
    static DimensionVector parse(std::string_view text);

    const std::vector<unsigned>& dims() const { return d_; }
    const std::vector<unsigned>& blocks() const { return b_; }
    std::size_t length() const { return d_.size(); }
    unsigned n() const { return d_.back(); }
    unsigned nilradical_dim() const;
    /// Sorted multiset of the nonzero block sizes.
    std::vector<unsigned> block_multiset() const;
    /// True iff t <= 5, the range where orbit finiteness is guaranteed.
    bool finite_type() const { return length() <= kFiniteTypeMaxLength; }

    std::string to_string() const;
    bool operator==(const DimensionVector&) const = default;

private:
    std::vector<unsigned> d_;
    std::vector<unsigned> b_;
};

/// |GL_m(q)| = prod_{i<m} (q^m - q^i).
BigInt gl_order(unsigned m, std::uint64_t q);

struct GroupOrders {
    BigInt order_P;
    BigInt order_U;
    BigInt order_L;
    unsigned dim_u = 0;
};

struct Position {
    unsigned row = 0;
    unsigned col = 0;
    bool operator==(const Position&) const = default;
};

/// An elementary element of P(d) with a cheap in-place conjugation x -> g x g^{-1}.
struct ElementaryGenerator {
    enum class Kind {
        Torus,         // 1 + (scalar - 1) E_{a,a}
        Transvection,  // 1 + scalar E_{a,b}
        BlockCycle,    // cyclic permutation of columns a..a+b-1 (backwards if `reverse`)
    };

    Kind kind = Kind::Torus;
    unsigned a = 0;
    unsigned b = 0;
    Elem scalar = 1;
    bool reverse = false;

    MatrixFq matrix(const FiniteField& field, std::size_t n) const;
    ElementaryGenerator inverse(const FiniteField& field) const;
    bool is_identity() const;
    /// Replaces the row-major n x n matrix x by g x g^{-1}.
    void conjugate(std::span<Elem> x, std::size_t n, const FiniteField& field) const;
};

class FlagContext;

/// Input range over u(d) in enumeration order; dereferencing builds a matrix.
class NilradicalRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = MatrixFq;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const FlagContext* ctx, std::uint64_t index) : ctx_(ctx), index_(index) {}
        MatrixFq operator*() const;
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++index_;
            return copy;
        }
        bool operator==(const iterator& other) const { return index_ == other.index_; }

    private:
        const FlagContext* ctx_ = nullptr;
        std::uint64_t index_ = 0;
    };

    NilradicalRange(const FlagContext* ctx, std::uint64_t count) : ctx_(ctx), count_(count) {}
    iterator begin() const { return {ctx_, 0}; }
    iterator end() const { return {ctx_, count_}; }
    std::uint64_t size() const { return count_; }

private:
    const FlagContext* ctx_;
    std::uint64_t count_;
};

/// The standard parabolic P(d) <= GL_n(q), its unipotent radical U(d) and
/// the nilradical u(d) of strictly block upper triangular matrices.
///
/// Elements of u(d) are addressed by their enumeration index: the base-q
/// number whose digits are the entries at cross_positions(), the first cross
/// position being the most significant digit. Increasing index is the
/// enumeration order.
class FlagContext {
public:
    FlagContext(DimensionVector dv, FiniteField field);

    const DimensionVector& dims() const { return dv_; }
    const FiniteField& field() const { return field_; }
    unsigned n() const { return dv_.n(); }
    unsigned block_of(unsigned column) const { return block_of_[column]; }
    /// Positions (r, s) with block(r) < block(s), row-major.
    const std::vector<Position>& cross_positions() const { return cross_; }
    /// Positions (r, s) with block(r) == block(s), row-major.
    const std::vector<Position>& levi_positions() const { return levi_; }
    /// Index into cross_positions() of entry r*n+s, or -1.
    int cross_index(unsigned r, unsigned s) const { return cross_index_[r * n() + s]; }

    bool in_P(const MatrixFq& g) const;
    bool in_U(const MatrixFq& g) const;
    bool in_nilradical(const MatrixFq& x) const;

    GroupOrders group_orders() const;

    /// Generating set of P(d), closed under inverses unless `with_inverses`
    /// is false (orbit closure in a finite group needs no inverses).
    std::vector<ElementaryGenerator> elementary_generators_P(bool with_inverses = true) const;
    std::vector<MatrixFq> generators_P() const;
    /// Transvections 1 + beta E_{r,s} for every cross position and every
    /// F_p-basis element beta of F_q; they generate U(d).
    std::vector<ElementaryGenerator> elementary_generators_U() const;

    /// q^{dim u} as an exact integer.
    BigInt state_count() const;
    /// q^{dim u}; throws CapExceeded when it exceeds `cap`.
    std::uint64_t checked_state_count(std::uint64_t cap) const;
    NilradicalRange enumerate_nilradical(std::uint64_t cap = kDefaultStateCap) const;

    /// Writes the element with the given index into a zeroed n x n buffer.
    void decode_into(std::uint64_t index, std::span<Elem> out) const;
    std::uint64_t encode_index(std::span<const Elem> x) const;
    MatrixFq matrix_at(std::uint64_t index) const;
    /// Throws MembershipViolation if x is not in u(d).
    std::uint64_t index_of(const MatrixFq& x) const;

private:
    void require_size(const MatrixFq& m) const;

    DimensionVector dv_;
    FiniteField field_;
    std::vector<unsigned> block_of_;
    std::vector<unsigned> block_start_;
    std::vector<Position> cross_;
    std::vector<Position> levi_;
    std::vector<int> cross_index_;
};

}  // namespace flagclass
