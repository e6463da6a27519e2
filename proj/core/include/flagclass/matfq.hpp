#pragma once

#include "flagclass/bigint.hpp"
#include "flagclass/gf.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace flagclass {

/// Rank of a rows x cols matrix stored row-major in `entries`, by Gaussian
/// elimination over `field`. The buffer is overwritten with an echelon form.
std::size_t rank_in_place(std::span<Elem> entries, std::size_t rows, std::size_t cols,
                          const FiniteField& field);

/// Dense square matrix over a finite field. Value type; all operations are
/// pure.
class MatrixFq {
public:
    MatrixFq(FiniteField field, std::size_t n);
    /// Throws DimensionMismatch unless entries.size() == n*n, and
    /// InvalidArgument if an entry is not < q.
    MatrixFq(FiniteField field, std::size_t n, std::vector<Elem> entries);

    static MatrixFq zero(const FiniteField& field, std::size_t n) { return {field, n}; }
    static MatrixFq identity(const FiniteField& field, std::size_t n);
    /// Matrix unit E_{r,s} scaled by `value` (0-based indices).
    static MatrixFq unit(const FiniteField& field, std::size_t n, std::size_t r, std::size_t s,
                         Elem value = 1);
    static MatrixFq from_rows(const FiniteField& field,
                              const std::vector<std::vector<unsigned>>& rows);

    const FiniteField& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::span<const Elem> entries() const { return entries_; }
    std::span<Elem> entries() { return entries_; }

    Elem operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

    MatrixFq operator+(const MatrixFq& other) const;
    MatrixFq operator-(const MatrixFq& other) const;
    MatrixFq operator*(const MatrixFq& other) const;
    MatrixFq scaled(Elem s) const;

    bool operator==(const MatrixFq& other) const {
        return n_ == other.n_ && field_ == other.field_ && entries_ == other.entries_;
    }

    std::size_t rank() const;
    std::size_t kernel_dim() const { return n_ - rank(); }
    bool is_zero() const;

    /// Empty when the matrix is singular.
    std::optional<MatrixFq> try_inverse() const;

    /// Injective row-major base-q key: entry (0,0) is the most significant
    /// digit. decode() is its exact inverse.
    BigInt encode() const;
    static MatrixFq decode(const FiniteField& field, std::size_t n, const BigInt& key);

private:
    void require_compatible(const MatrixFq& other) const;

    FiniteField field_;
    std::size_t n_;
    std::vector<Elem> entries_;
};

}  // namespace flagclass
