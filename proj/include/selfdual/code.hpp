#pragma once
// Linear codes over GF(3)/GF(4), kept in canonical RREF so that equal codes
// have identical generator matrices.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace selfdual {

class LinearCode {
public:
    /// The zero code of length n.
    LinearCode(Field f, std::size_t n) : generator_(f, 0, n) {}

    /// The code spanned by the rows of `m` (dependent rows are dropped).
    explicit LinearCode(const Matrix& m) : generator_(rref(m)) {}

    LinearCode(Field f, const std::vector<FieldVector>& rows, std::size_t n)
        : LinearCode(Matrix::from_rows(f, rows, n)) {}

    Field field() const { return generator_.field(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }

    bool operator==(const LinearCode&) const = default;

private:
    Matrix generator_;
};

/// Dual code under `form` (Euclidean over GF(3), Hermitian over GF(4)).
inline LinearCode dual(const LinearCode& c, Form form) {
    require_form(c.field(), form);
    const Matrix& g = c.generator();
    if (g.rows() == 0) return LinearCode(Matrix::identity(c.field(), c.length()));
    // x is Hermitian-orthogonal to g iff sum x_i conj(g_i) = 0
    return LinearCode(null_space(form == Form::Hermitian ? g.conjugated() : g));
}

/// True iff every pair of generator rows (including each row with itself) is
/// orthogonal under `form`.
inline bool is_self_orthogonal(const LinearCode& c, Form form) {
    require_form(c.field(), form);
    auto rows = c.generator().row_vectors();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (!inner_product(rows[i], rows[j], form).is_zero()) return false;
    return true;
}

/// Existence condition on the length of a self-dual code: n ≡ 0 (mod 4) over
/// GF(3), n even over GF(4).
inline bool admissible_self_dual_length(Field f, std::size_t n) {
    return n > 0 && (f == Field::F3 ? n % 4 == 0 : n % 2 == 0);
}

inline bool is_self_dual(const LinearCode& c, Form form) {
    require_form(c.field(), form);
    const std::size_t n = c.length();
    if (!admissible_self_dual_length(c.field(), n)) return false;
    return 2 * c.dimension() == n && is_self_orthogonal(c, form);
}

inline bool is_self_dual(const LinearCode& c) { return is_self_dual(c, natural_form(c.field())); }

/// Reduces x against the RREF generator and returns the remainder.
inline FieldVector reduce(const LinearCode& c, const FieldVector& x) {
    if (x.field() != c.field()) throw std::invalid_argument("mixed-field operation");
    if (x.size() != c.length()) throw std::invalid_argument("vector length mismatch");
    const Field f = c.field();
    const Matrix& g = c.generator();
    FieldVector r = x;
    auto rs = r.symbols();
    std::size_t col = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        while (g(i, col) == 0) ++col;  // pivot of row i; RREF pivots are 1
        const Symbol factor = sym_neg(f, rs[col]);
        if (factor == 0) continue;
        auto gr = g.row_span(i);
        for (std::size_t j = 0; j < rs.size(); ++j) rs[j] = sym_add(f, rs[j], sym_mul(f, factor, gr[j]));
    }
    return r;
}

inline bool contains(const LinearCode& c, const FieldVector& x) { return reduce(c, x).is_zero(); }

/// Pivot columns of the canonical generator (an information set).
inline std::vector<std::size_t> pivot_columns(const LinearCode& c) {
    std::vector<std::size_t> out;
    const Matrix& g = c.generator();
    std::size_t col = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        while (g(i, col) == 0) ++col;
        out.push_back(col);
    }
    return out;
}

}  // namespace selfdual
