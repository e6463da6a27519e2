#include "flagclass/matfq.hpp"

#include "flagclass/errors.hpp"

#include <string>
#include <utility>

namespace flagclass {

std::size_t rank_in_place(std::span<Elem> a, std::size_t rows, std::size_t cols,
                          const FiniteField& f) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a[pivot * cols + j], a[rank * cols + j]);
        const Elem inv = f.inv(a[rank * cols + col]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Elem lead = a[r * cols + col];
            if (lead == 0) continue;
            const Elem factor = f.neg(f.mul(lead, inv));
            for (std::size_t j = col; j < cols; ++j)
                a[r * cols + j] = f.add(a[r * cols + j], f.mul(factor, a[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

MatrixFq::MatrixFq(FiniteField field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, 0) {}

MatrixFq::MatrixFq(FiniteField field, std::size_t n, std::vector<Elem> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n * n)
        throw DimensionMismatch("expected " + std::to_string(n * n) + " entries, got " +
                                std::to_string(entries_.size()));
    for (Elem e : entries_)
        if (e >= field_.q()) throw InvalidArgument("entry " + std::to_string(e) + " is not < q");
}

MatrixFq MatrixFq::identity(const FiniteField& field, std::size_t n) {
    MatrixFq m(field, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixFq MatrixFq::unit(const FiniteField& field, std::size_t n, std::size_t r, std::size_t s,
                        Elem value) {
    MatrixFq m(field, n);
    m(r, s) = value;
    return m;
}

MatrixFq MatrixFq::from_rows(const FiniteField& field,
                             const std::vector<std::vector<unsigned>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Elem> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DimensionMismatch("matrix rows must have length n");
        for (unsigned v : row) {
            if (v >= field.q()) throw InvalidArgument("entry " + std::to_string(v) + " is not < q");
            entries.push_back(static_cast<Elem>(v));
        }
    }
    return {field, n, std::move(entries)};
}

void MatrixFq::require_compatible(const MatrixFq& other) const {
    if (n_ != other.n_)
        throw DimensionMismatch("matrix sizes " + std::to_string(n_) + " and " +
                                std::to_string(other.n_));
    if (!(field_ == other.field_)) throw DimensionMismatch("matrices over different fields");
}

MatrixFq MatrixFq::operator+(const MatrixFq& other) const {
    require_compatible(other);
    MatrixFq r(field_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = field_.add(entries_[i], other.entries_[i]);
    return r;
}

MatrixFq MatrixFq::operator-(const MatrixFq& other) const {
    require_compatible(other);
    MatrixFq r(field_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = field_.sub(entries_[i], other.entries_[i]);
    return r;
}

MatrixFq MatrixFq::operator*(const MatrixFq& other) const {
    require_compatible(other);
    MatrixFq r(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Elem a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j)
                r(i, j) = field_.add(r(i, j), field_.mul(a, other(k, j)));
        }
    return r;
}

MatrixFq MatrixFq::scaled(Elem s) const {
    MatrixFq r(field_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = field_.mul(s, entries_[i]);
    return r;
}

std::size_t MatrixFq::rank() const {
    std::vector<Elem> scratch = entries_;
    return rank_in_place(scratch, n_, n_, field_);
}

bool MatrixFq::is_zero() const {
    for (Elem e : entries_)
        if (e != 0) return false;
    return true;
}

std::optional<MatrixFq> MatrixFq::try_inverse() const {
    // Gauss-Jordan on [A | I].
    const std::size_t w = 2 * n_;
    std::vector<Elem> a(n_ * w, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) a[i * w + j] = (*this)(i, j);
        a[i * w + n_ + i] = 1;
    }
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a[pivot * w + col] == 0) ++pivot;
        if (pivot == n_) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < w; ++j) std::swap(a[pivot * w + j], a[col * w + j]);
        const Elem inv = field_.inv(a[col * w + col]);
        for (std::size_t j = 0; j < w; ++j) a[col * w + j] = field_.mul(inv, a[col * w + j]);
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == col || a[r * w + col] == 0) continue;
            const Elem factor = field_.neg(a[r * w + col]);
            for (std::size_t j = 0; j < w; ++j)
                a[r * w + j] = field_.add(a[r * w + j], field_.mul(factor, a[col * w + j]));
        }
    }
    MatrixFq result(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) result(i, j) = a[i * w + n_ + j];
    return result;
}

BigInt MatrixFq::encode() const {
    BigInt key = 0;
    for (Elem e : entries_) key = key * field_.q() + e;
    return key;
}

MatrixFq MatrixFq::decode(const FiniteField& field, std::size_t n, const BigInt& key) {
    if (key < 0) throw InvalidArgument("negative matrix key");
    MatrixFq m(field, n);
    BigInt rest = key;
    for (std::size_t i = n * n; i-- > 0;) {
        m.entries_[i] = static_cast<Elem>(static_cast<unsigned>(rest % field.q()));
        rest /= field.q();
    }
    if (rest != 0) throw InvalidArgument("matrix key out of range for n and q");
    return m;
}

}  // namespace flagclass
