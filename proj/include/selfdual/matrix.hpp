#pragma once
// Dense matrices over GF(3)/GF(4) with canonical row reduction.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace selfdual {

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(Field f, const std::vector<FieldVector>& rows, std::size_t cols) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].field() != f) throw std::invalid_argument("mixed-field operation");
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            auto s = rows[i].symbols();
            std::copy(s.begin(), s.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }

    static Matrix from_rows(Field f, const std::vector<FieldVector>& rows) {
        if (rows.empty()) throw std::invalid_argument("from_rows: empty row list needs an explicit column count");
        return from_rows(f, rows, rows.front().size());
    }

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Symbol> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    FieldVector row(std::size_t r) const { return {field_, std::vector<Symbol>(row_span(r).begin(), row_span(r).end())}; }

    std::vector<FieldVector> row_vectors() const {
        std::vector<FieldVector> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
        return out;
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix negated() const {
        Matrix t(*this);
        for (Symbol& s : t.data_) s = sym_neg(field_, s);
        return t;
    }

    Matrix conjugated() const {
        if (field_ != Field::F4) throw std::invalid_argument("conjugation is defined over F4 only");
        Matrix t(*this);
        for (Symbol& s : t.data_) s = sym_conj(s);
        return t;
    }

    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void place(const Matrix& block, std::size_t r0, std::size_t c0) {
        if (block.field_ != field_) throw std::invalid_argument("mixed-field operation");
        if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw std::out_of_range("block does not fit");
        for (std::size_t r = 0; r < block.rows_; ++r)
            for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
    }

    /// Horizontal concatenation (this | right).
    Matrix hconcat(const Matrix& right) const {
        if (right.rows_ != rows_) throw std::invalid_argument("hconcat: row count mismatch");
        Matrix m(field_, rows_, cols_ + right.cols_);
        m.place(*this, 0, 0);
        m.place(right, 0, cols_);
        return m;
    }

    void append_row(const FieldVector& v) {
        if (v.field() != field_) throw std::invalid_argument("mixed-field operation");
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), v.symbols().begin(), v.symbols().end());
        ++rows_;
    }

    bool operator==(const Matrix&) const = default;

private:
    Field field_ = Field::F3;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

struct RowEchelon {
    Matrix matrix;                    // reduced rows only, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form, visiting columns in `column_order`: each pivot is
/// the first column of that order where the remaining rows have a nonzero
/// entry. With the natural order this is the canonical RREF.
inline RowEchelon row_reduce(const Matrix& in, const std::vector<std::size_t>& column_order) {
    const Field f = in.field();
    Matrix m = in;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c : column_order) {
        if (r == m.rows()) break;
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Symbol inv = sym_inv(f, m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = sym_mul(f, m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Symbol factor = sym_neg(f, m(i, c));
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sym_add(f, m(i, j), sym_mul(f, factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(f, r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return {std::move(out), std::move(pivots)};
}

inline RowEchelon row_reduce(const Matrix& in) {
    std::vector<std::size_t> order(in.cols());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return row_reduce(in, order);
}

/// Canonical reduced row echelon form; zero rows are dropped.
inline Matrix rref(const Matrix& m) { return row_reduce(m).matrix; }

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of {x : M x^T = 0}.
inline Matrix null_space(const Matrix& m) {
    const Field f = m.field();
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Matrix basis(f, m.cols() - e.pivots.size(), m.cols());
    std::size_t b = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(b, free) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(b, e.pivots[i]) = sym_neg(f, e.matrix(i, free));
        ++b;
    }
    return basis;
}

}  // namespace selfdual
