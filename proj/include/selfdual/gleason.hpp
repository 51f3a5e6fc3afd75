#pragma once
// Gleason-type expansions for ternary self-dual and quaternary Hermitian
// self-dual weight enumerators, the parametric near-extremal enumerators
// derived from them, and the divisibility and alpha-range facts they imply.
//
// Everything here is exact integer arithmetic. Basis polynomials are handled
// in x = y^3 (GF(3)) or x = y^2 (GF(4)); the public polynomial type is in y.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "enumerate.hpp"
#include "field.hpp"

namespace selfdual {

/// Sparse polynomial in one variable with big-integer coefficients. Zero
/// coefficients are never stored.
class BigPoly {
public:
    BigPoly() = default;
    BigPoly(std::initializer_list<std::pair<const std::size_t, BigInt>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static BigPoly monomial(std::size_t e, const BigInt& c = 1) {
        BigPoly p;
        p.add_term(e, c);
        return p;
    }

    const std::map<std::size_t, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coefficient(std::size_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    std::size_t lowest_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

    void add_term(std::size_t e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigPoly& operator+=(const BigPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    friend BigPoly operator+(BigPoly a, const BigPoly& b) { return a += b; }

    friend BigPoly operator*(const BigPoly& a, const BigPoly& b) {
        BigPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    BigPoly pow(std::size_t k) const {
        BigPoly r = monomial(0);
        BigPoly b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    /// p(y) -> p(y^k)
    BigPoly substitute_power(std::size_t k) const {
        BigPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
        return r;
    }

    BigInt evaluate(const BigInt& y) const {
        BigInt acc = 0;
        std::size_t last = degree();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            for (std::size_t e = last; e > it->first; --e) acc *= y;
            acc += it->second;
            last = it->first;
        }
        for (std::size_t e = last; e > 0; --e) acc *= y;
        return acc;
    }

    bool operator==(const BigPoly&) const = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            std::string cs = to_decimal(c);
            if (!s.empty()) s += cs[0] == '-' ? " - " : " + ";
            else if (cs[0] == '-') s += "-";
            if (cs[0] == '-') cs.erase(0, 1);
            s += cs;
            if (e) s += "*y^" + std::to_string(e);
        }
        return s;
    }

private:
    std::map<std::size_t, BigInt> terms_;
};

/// Largest m with a possible near-extremal code of length 12m (GF(3)) or 6m
/// (GF(4)); beyond these lengths no such code exists.
inline std::size_t near_extremal_max_m(Field f) { return f == Field::F3 ? 146 : 37; }

/// Length per unit of m: 12 for GF(3), 6 for GF(4).
inline std::size_t length_per_m(Field f) { return f == Field::F3 ? 12 : 6; }

/// Exponent step between consecutive possible weights: 3 or 2.
inline std::size_t weight_step(Field f) { return f == Field::F3 ? 3 : 2; }

/// The modulus of the minimum-weight count of a near-extremal code: 8 or 9.
inline unsigned near_extremal_modulus(Field f) { return f == Field::F3 ? 8 : 9; }

namespace detail {

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Coefficients c[0..] in x of (1 + a x)^p (1 - x)^q x^j.
inline std::vector<BigInt> basis_in_x(unsigned a, std::size_t p, std::size_t q, std::size_t j) {
    std::vector<BigInt> left(p + 1), right(q + 1);
    BigInt apow = 1;
    for (std::size_t i = 0; i <= p; ++i) {
        left[i] = binomial(p, i) * apow;
        apow *= a;
    }
    for (std::size_t i = 0; i <= q; ++i) right[i] = (i % 2 ? -1 : 1) * binomial(q, i);
    std::vector<BigInt> out(j + p + q + 1, BigInt(0));
    for (std::size_t i = 0; i <= p; ++i)
        for (std::size_t k = 0; k <= q; ++k) out[j + i + k] += left[i] * right[k];
    return out;
}

struct GleasonShape {
    unsigned a;            // 8 or 3
    std::size_t half;      // n/4 or n/2: exponent of (1 + a x) at j = 0
    std::size_t power;     // 3 or 2: exponent of (1 - x) per unit of j
    std::size_t step;      // y-exponent of x
    std::size_t max_j;
};

inline GleasonShape gleason_shape(Field f, std::size_t n) {
    if (!admissible_self_dual_length(f, n))
        throw std::invalid_argument("no self-dual code of length " + std::to_string(n) + " over " +
                                    std::string(field_name(f)));
    if (f == Field::F3) return {8, n / 4, 3, 3, n / 12};
    return {3, n / 2, 2, 2, n / 6};
}

}  // namespace detail

/// a_j-th basis polynomial of the Gleason-type expansion, in y:
/// (1+8y^3)^{n/4-3j} (y^3(1-y^3)^3)^j over GF(3) and
/// (1+3y^2)^{n/2-3j} (y^2(1-y^2)^2)^j over GF(4).
inline BigPoly gleason_basis(Field f, std::size_t n, std::size_t j) {
    const auto sh = detail::gleason_shape(f, n);
    if (j > sh.max_j) throw std::out_of_range("gleason_basis: j above floor(n/" + std::to_string(sh.power == 3 ? 12 : 6) + ")");
    const auto c = detail::basis_in_x(sh.a, sh.half - 3 * j, sh.power * j, j);
    BigPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(i * sh.step, c[i]);
    return p;
}

/// A_w = s + t*alpha.
struct AffineCount {
    BigInt s = 0;
    BigInt t = 0;
    bool operator==(const AffineCount&) const = default;
    BigInt at(const BigInt& alpha) const { return s + t * alpha; }
};

/// Weight enumerator of a near-extremal self-dual code of length 12m (GF(3))
/// or 6m (GF(4)) as a function of alpha, the number of minimum-weight words.
struct ParametricEnumerator {
    Field field = Field::F3;
    std::size_t n = 0;
    std::size_t m = 0;
    std::map<std::size_t, AffineCount> terms;  // weight -> (s,t), zero terms omitted
    std::vector<AffineCount> a;                // expansion coefficients a_0..a_m

    std::size_t min_weight() const { return weight_step(field) * m; }

    AffineCount at_weight(std::size_t w) const {
        auto it = terms.find(w);
        return it == terms.end() ? AffineCount{} : it->second;
    }

    WeightEnumerator evaluate(const BigInt& alpha) const {
        WeightEnumerator e;
        e.field = field;
        e.n = n;
        e.counts.assign(n + 1, BigInt(0));
        for (const auto& [w, c] : terms) e.counts[w] = c.at(alpha);
        return e;
    }
};

namespace detail {

inline void require_near_extremal_m(Field f, std::size_t m) {
    if (m < 1 || m > near_extremal_max_m(f))
        throw std::out_of_range("m = " + std::to_string(m) + " outside 1.." + std::to_string(near_extremal_max_m(f)) +
                                " for " + std::string(field_name(f)));
}

}  // namespace detail

/// Imposes A_0 = 1, A_{sj} = 0 for 0 < j < m and A_{sm} = alpha (s = 3 or 2)
/// on the Gleason expansion and solves the unitriangular system exactly.
inline ParametricEnumerator parametric_near_extremal(Field f, std::size_t m) {
    detail::require_near_extremal_m(f, m);
    const std::size_t n = length_per_m(f) * m;
    const auto sh = detail::gleason_shape(f, n);
    const std::size_t deg = n / sh.step;  // x-degree of the enumerator

    // B_0 = (1 + a x)^half; B_{j+1} = B_j * x (1-x)^power / (1 + a x)^3.
    std::vector<std::vector<BigInt>> basis;
    basis.reserve(m + 1);
    basis.push_back(detail::basis_in_x(sh.a, sh.half, 0, 0));
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<BigInt> p = basis.back();
        for (int r = 0; r < 3; ++r) {
            // exact division by (1 + a x): q_i = p_i - a q_{i-1}
            std::vector<BigInt> q(p.size() - 1);
            BigInt prev = 0;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) q[i] = prev = p[i] - sh.a * prev;
            if (p.back() != sh.a * prev) throw std::logic_error("gleason: inexact division by (1 + a x)");
            p = std::move(q);
        }
        for (std::size_t r = 0; r < sh.power; ++r) {  // times (1 - x)
            p.emplace_back(0);
            for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= p[i - 1];
        }
        p.insert(p.begin(), BigInt(0));  // times x
        basis.push_back(std::move(p));
    }
    for (auto& b : basis) b.resize(deg + 1, BigInt(0));

    ParametricEnumerator pe;
    pe.field = f;
    pe.n = n;
    pe.m = m;
    pe.a.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        if (basis[i][i] != 1) throw std::logic_error("gleason: basis is not unitriangular");
        BigInt acc = i == 0 ? BigInt(1) : BigInt(0);
        for (std::size_t j = 0; j < i; ++j) acc -= pe.a[j].s * basis[j][i];
        pe.a[i].s = acc;
    }
    pe.a[m].t = 1;

    for (std::size_t i = 0; i <= deg; ++i) {
        AffineCount c;
        for (std::size_t j = 0; j <= m; ++j) c.s += pe.a[j].s * basis[j][i];
        c.t = basis[m][i];
        if (c.s != 0 || c.t != 0) pe.terms.emplace(i * sh.step, std::move(c));
    }
    return pe;
}

struct DivisibilityReport {
    Field field = Field::F3;
    std::size_t m = 0;
    unsigned modulus = 8;
    std::size_t checked = 0;
    std::vector<std::size_t> violations;  // weights whose s is not divisible

    bool passed() const { return violations.empty(); }
};

/// Checks s_w = 0 mod 8 (GF(3)) or mod 9 (GF(4)) at every weight above the
/// minimum weight. With alpha divisible by the same modulus this makes every
/// A_w divisible by it.
inline DivisibilityReport divisibility_check(const ParametricEnumerator& pe) {
    DivisibilityReport r;
    r.field = pe.field;
    r.m = pe.m;
    r.modulus = near_extremal_modulus(pe.field);
    const std::size_t step = weight_step(pe.field);
    for (std::size_t w = pe.min_weight() + step; w <= pe.n; w += step) {
        ++r.checked;
        if (pe.at_weight(w).s % r.modulus != 0) r.violations.push_back(w);
    }
    return r;
}

inline DivisibilityReport divisibility_check(Field f, std::size_t m) {
    return divisibility_check(parametric_near_extremal(f, m));
}

/// Admissible alpha = modulus * beta, beta in [beta_min, beta_max].
struct AlphaRange {
    unsigned modulus = 8;
    BigInt beta_min = 1;
    BigInt beta_max = 0;
    bool empty() const { return beta_min > beta_max; }
    BigInt alpha_min() const { return beta_min * modulus; }
    BigInt alpha_max() const { return beta_max * modulus; }
    bool contains_alpha(const BigInt& alpha) const {
        return alpha % modulus == 0 && alpha / modulus >= beta_min && alpha / modulus <= beta_max;
    }
};

/// Intersects s_w + t_w alpha >= 0 over all weights with alpha = modulus*beta,
/// beta >= 1. An empty range is reported through AlphaRange::empty().
inline AlphaRange alpha_range(const ParametricEnumerator& pe) {
    AlphaRange r;
    r.modulus = near_extremal_modulus(pe.field);
    std::optional<BigInt> hi;
    bool infeasible = false;
    for (const auto& [w, c] : pe.terms) {
        const BigInt tm = c.t * r.modulus;
        if (c.t > 0) {
            const BigInt lo = ceil_div(-c.s, tm);
            if (lo > r.beta_min) r.beta_min = lo;
        } else if (c.t < 0) {
            const BigInt up = floor_div(c.s, -tm);
            if (!hi || up < *hi) hi = up;
        } else if (c.s < 0) {
            infeasible = true;
        }
    }
    if (!hi) throw std::logic_error("alpha_range: no upper bound on alpha");
    r.beta_max = *hi;
    if (infeasible) r.beta_max = r.beta_min - 1;
    return r;
}

inline AlphaRange alpha_range(Field f, std::size_t m) { return alpha_range(parametric_near_extremal(f, m)); }

/// The alpha = 0 specialization: the enumerator an extremal code of the same
/// length would have, if one exists.
struct ExtremalEnumerator {
    Field field = Field::F3;
    std::size_t m = 0;
    WeightEnumerator enumerator;
    std::vector<std::size_t> negative_weights;
    std::vector<std::size_t> divisibility_violations;

    bool nonnegative() const { return negative_weights.empty(); }
    std::size_t min_weight() const { return weight_step(field) * (m + 1); }
};

inline ExtremalEnumerator extremal_enumerator(Field f, std::size_t m) {
    const auto pe = parametric_near_extremal(f, m);
    ExtremalEnumerator ex;
    ex.field = f;
    ex.m = m;
    ex.enumerator = pe.evaluate(0);
    const unsigned mod = near_extremal_modulus(f);
    for (std::size_t w = 1; w <= pe.n; ++w) {
        const BigInt& c = ex.enumerator.counts[w];
        if (c < 0) ex.negative_weights.push_back(w);
        if (w > pe.min_weight() && c % mod != 0) ex.divisibility_violations.push_back(w);
    }
    return ex;
}

}  // namespace selfdual
