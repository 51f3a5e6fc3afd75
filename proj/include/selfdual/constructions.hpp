#pragma once
// Generator-matrix recipes: mu-circulant matrices, four-circulant and
// four-negacirculant codes, bordered double circulant codes, mu-circulant
// (quasi-twisted) codes, the Ito array, direct sums and neighbors.
//
// Builders do not check self-duality; callers verify.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "code.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace selfdual {

/// n x n matrix whose row i+1 is row i shifted right once, the wrapped entry
/// multiplied by mu: entry (i,j) = mu^[j<i] r_{(j-i) mod n}.
inline Matrix circulant_matrix(const FieldElement& mu, const FieldVector& first_row) {
    if (mu.field() != first_row.field()) throw std::invalid_argument("mixed-field operation");
    if (mu.is_zero()) throw std::invalid_argument("circulant_matrix: mu must be nonzero");
    const Field f = mu.field();
    const std::size_t n = first_row.size();
    auto r = first_row.symbols();
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Symbol v = r[(j + n - i) % n];
            m(i, j) = j < i ? sym_mul(f, mu.value(), v) : v;
        }
    return m;
}

inline Matrix negacirculant_matrix(const FieldVector& first_row) {
    return circulant_matrix(FieldElement(first_row.field(), sym_neg(first_row.field(), 1)), first_row);
}

/// (I_{2n} | [[A, B], [-B^T, A^T]]) with A, B mu-circulant, mu = 1 or -1.
inline LinearCode four_block_code(const FieldVector& ra, const FieldVector& rb, const FieldElement& mu) {
    if (ra.size() != rb.size()) throw std::invalid_argument("four_block_code: rA and rB lengths differ");
    ra.check_compatible(rb);
    const Field f = ra.field();
    if (mu.field() != f) throw std::invalid_argument("mixed-field operation");
    if (mu.value() != 1 && mu.value() != sym_neg(f, 1))
        throw std::invalid_argument("four_block_code: mu must be 1 or -1");
    const std::size_t n = ra.size();
    const Matrix a = circulant_matrix(mu, ra);
    const Matrix b = circulant_matrix(mu, rb);
    Matrix right(f, 2 * n, 2 * n);
    right.place(a, 0, 0);
    right.place(b, 0, n);
    right.place(b.transposed().negated(), n, 0);
    right.place(a.transposed(), n, n);
    return LinearCode(Matrix::identity(f, 2 * n).hconcat(right));
}

/// Bordered double circulant code of length 2n from the first row of the
/// (n-1) x (n-1) circulant A: (I_n | B) where B has top row (0, 1, ..., 1),
/// left column (0, 1, ..., 1)^T and A in the lower right.
inline LinearCode bordered_dcc(const FieldVector& ra) {
    const Field f = ra.field();
    const std::size_t n = ra.size() + 1;
    const Matrix a = circulant_matrix(FieldElement(f, 1), ra);
    Matrix right(f, n, n);
    for (std::size_t j = 1; j < n; ++j) right(0, j) = 1;
    for (std::size_t i = 1; i < n; ++i) right(i, 0) = 1;
    right.place(a, 1, 1);
    return LinearCode(Matrix::identity(f, n).hconcat(right));
}

/// (I_n | A) with A mu-circulant.
inline LinearCode mu_circulant_code(const FieldElement& mu, const FieldVector& ra) {
    const Matrix a = circulant_matrix(mu, ra);
    return LinearCode(Matrix::identity(ra.field(), ra.size()).hconcat(a));
}

/// Ternary [72,36] code (I_36 | Ito array) with 9 x 9 negacirculant blocks:
///   A    B    C    D
///   B   -A    D   -C
///   C^T -D^T -A^T  B^T
///   D^T  C^T -B^T -A^T
inline LinearCode ito_array_code(const FieldVector& ra, const FieldVector& rb, const FieldVector& rc,
                                 const FieldVector& rd) {
    for (const auto* r : {&ra, &rb, &rc, &rd}) {
        if (r->field() != Field::F3) throw std::invalid_argument("ito_array_code: rows must be over F3");
        if (r->size() != 9) throw std::invalid_argument("ito_array_code: rows must have length 9");
    }
    const Field f = Field::F3;
    const Matrix a = negacirculant_matrix(ra), b = negacirculant_matrix(rb);
    const Matrix c = negacirculant_matrix(rc), d = negacirculant_matrix(rd);
    const Matrix blocks[4][4] = {
        {a, b, c, d},
        {b, a.negated(), d, c.negated()},
        {c.transposed(), d.transposed().negated(), a.transposed().negated(), b.transposed()},
        {d.transposed(), c.transposed(), b.transposed().negated(), a.transposed().negated()},
    };
    Matrix right(f, 36, 36);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) right.place(blocks[i][j], 9 * i, 9 * j);
    return LinearCode(Matrix::identity(f, 36).hconcat(right));
}

/// Block-diagonal sum. Either part may be the length-0 code.
inline LinearCode direct_sum(const LinearCode& x, const LinearCode& y) {
    if (x.field() != y.field()) throw std::invalid_argument("direct_sum: field mismatch");
    const Field f = x.field();
    Matrix g(f, x.dimension() + y.dimension(), x.length() + y.length());
    g.place(x.generator(), 0, 0);
    g.place(y.generator(), x.dimension(), x.length());
    return LinearCode(g);
}

/// The neighbor <C ∩ <x>^perp, x> of a self-dual code C, with
/// x = (0, ..., 0, x_hat) carrying n/2 leading zeros.
inline LinearCode neighbor(const LinearCode& base, const FieldVector& x_hat, Form form) {
    require_form(base.field(), form);
    if (x_hat.field() != base.field()) throw std::invalid_argument("mixed-field operation");
    const std::size_t n = base.length();
    if (2 * x_hat.size() != n)
        throw std::invalid_argument("neighbor: x_hat has length " + std::to_string(x_hat.size()) + ", expected " +
                                    std::to_string(n / 2));
    if (!is_self_dual(base, form)) throw std::invalid_argument("neighbor: base code is not self-dual");

    FieldVector x(base.field(), n);
    for (std::size_t i = 0; i < x_hat.size(); ++i) x.symbols()[n / 2 + i] = x_hat.symbols()[i];
    if (!inner_product(x, x, form).is_zero()) throw std::invalid_argument("neighbor: <x,x> is nonzero");
    if (contains(base, x)) throw std::invalid_argument("neighbor: x already lies in the base code");

    // C ∩ <x>^perp is the kernel of c -> <c,x> restricted to C.
    const Field f = base.field();
    const Matrix& g = base.generator();
    std::vector<FieldVector> rows = g.row_vectors();
    std::vector<Symbol> ip(rows.size());
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ip[i] = inner_product(rows[i], x, form).value();
        if (ip[i] != 0 && pivot == rows.size()) pivot = i;
    }
    Matrix out(f, 0, n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot) continue;
        if (ip[i] == 0) {
            out.append_row(rows[i]);
        } else {
            // rows[i] - (ip_i / ip_p) rows[p] is orthogonal to x
            const Symbol c = sym_neg(f, sym_mul(f, ip[i], sym_inv(f, ip[pivot])));
            out.append_row(rows[i] + rows[pivot].scaled(FieldElement(f, c)));
        }
    }
    out.append_row(x);
    LinearCode result(out);
    if (!is_self_dual(result, form)) throw std::logic_error("neighbor: result is not self-dual");
    return result;
}

}  // namespace selfdual
