#pragma once
// Arithmetic over GF(3) and GF(4), field vectors and the two inner products
// (Euclidean over GF(3), Hermitian over GF(4)) that define duality.
//
// Symbols are stored as small integers:
//   GF(3): 0, 1, 2 (integers mod 3)
//   GF(4): two bits (b1,b0): 0 = 00, 1 = 01, w = 10, w^2 = 11, so that
//          addition is XOR and w^2 = w + 1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace selfdual {

enum class Field : std::uint8_t { F3, F4 };

enum class Form : std::uint8_t { Euclidean, Hermitian };

using Symbol = std::uint8_t;

constexpr unsigned field_order(Field f) { return f == Field::F3 ? 3u : 4u; }

inline std::string_view field_name(Field f) { return f == Field::F3 ? "F3" : "F4"; }

inline Field parse_field(std::string_view s) {
    if (s == "F3") return Field::F3;
    if (s == "F4") return Field::F4;
    throw std::invalid_argument("unknown field '" + std::string(s) + "' (expected F3 or F4)");
}

inline std::string_view form_name(Form f) { return f == Form::Euclidean ? "euclidean" : "hermitian"; }

/// The form that defines self-duality for a field in this library.
constexpr Form natural_form(Field f) { return f == Field::F3 ? Form::Euclidean : Form::Hermitian; }

inline void require_form(Field f, Form form) {
    if (natural_form(f) != form)
        throw std::invalid_argument(std::string(form_name(form)) + " form is not supported over " +
                                    std::string(field_name(f)));
}

namespace detail {

inline constexpr std::array<std::array<Symbol, 3>, 3> kF3Add{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
inline constexpr std::array<std::array<Symbol, 3>, 3> kF3Mul{{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}};
inline constexpr std::array<std::array<Symbol, 4>, 4> kF4Mul{
    {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
inline constexpr std::array<Symbol, 3> kF3Inv{0, 1, 2};
inline constexpr std::array<Symbol, 4> kF4Inv{0, 1, 3, 2};

}  // namespace detail

// Raw symbol arithmetic. Callers guarantee symbols are in range for the field.

constexpr Symbol sym_add(Field f, Symbol a, Symbol b) {
    return f == Field::F3 ? detail::kF3Add[a][b] : static_cast<Symbol>(a ^ b);
}

constexpr Symbol sym_neg(Field f, Symbol a) {
    if (f == Field::F4) return a;
    return a == 0 ? 0 : static_cast<Symbol>(3 - a);
}

constexpr Symbol sym_sub(Field f, Symbol a, Symbol b) { return sym_add(f, a, sym_neg(f, b)); }

constexpr Symbol sym_mul(Field f, Symbol a, Symbol b) {
    return f == Field::F3 ? detail::kF3Mul[a][b] : detail::kF4Mul[a][b];
}

constexpr Symbol sym_inv(Field f, Symbol a) {
    return f == Field::F3 ? detail::kF3Inv[a] : detail::kF4Inv[a];
}

/// Frobenius conjugation a -> a^2 on GF(4); swaps w and w^2.
constexpr Symbol sym_conj(Symbol a) { return detail::kF4Mul[a][a]; }

inline bool valid_symbol(Field f, unsigned v) { return v < field_order(f); }

inline std::string_view symbol_token(Field f, Symbol s) {
    static constexpr std::array<std::string_view, 3> f3{"0", "1", "2"};
    static constexpr std::array<std::string_view, 4> f4{"0", "1", "w", "w2"};
    return f == Field::F3 ? f3.at(s) : f4.at(s);
}

inline Symbol parse_symbol(Field f, std::string_view tok) {
    if (f == Field::F3) {
        if (tok == "0") return 0;
        if (tok == "1") return 1;
        if (tok == "2") return 2;
    } else {
        if (tok == "0") return 0;
        if (tok == "1") return 1;
        if (tok == "w") return 2;
        if (tok == "w2") return 3;
    }
    throw std::invalid_argument("invalid " + std::string(field_name(f)) + " token '" + std::string(tok) + "'");
}

/// A tagged scalar of GF(3) or GF(4).
class FieldElement {
public:
    constexpr FieldElement() = default;
    FieldElement(Field f, unsigned value) : field_(f), value_(static_cast<Symbol>(value)) {
        if (!valid_symbol(f, value)) throw std::invalid_argument("symbol out of range for field");
    }

    static FieldElement zero(Field f) { return {f, 0}; }
    static FieldElement one(Field f) { return {f, 1}; }
    /// The generator w of GF(4).
    static FieldElement omega() { return {Field::F4, 2}; }

    constexpr Field field() const { return field_; }
    constexpr Symbol value() const { return value_; }
    constexpr bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {field_, sym_add(field_, value_, same(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, sym_sub(field_, value_, same(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, sym_mul(field_, value_, same(o))}; }
    FieldElement operator-() const { return {field_, sym_neg(field_, value_)}; }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return {field_, sym_inv(field_, value_)};
    }

    FieldElement conjugate() const {
        if (field_ != Field::F4) throw std::invalid_argument("conjugation is defined over F4 only");
        return {field_, sym_conj(value_)};
    }

    bool operator==(const FieldElement&) const = default;

    std::string_view token() const { return symbol_token(field_, value_); }

private:
    Symbol same(const FieldElement& o) const {
        if (o.field_ != field_) throw std::invalid_argument("mixed-field operation");
        return o.value_;
    }

    Field field_ = Field::F3;
    Symbol value_ = 0;
};

enum class FieldOp { Add, Mul, Neg, Inv };

inline FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Neg: return -a;
        case FieldOp::Inv: return a.inverse();
    }
    throw std::invalid_argument("unknown field operation");
}

inline FieldElement conjugate(const FieldElement& a) { return a.conjugate(); }

/// A vector over GF(3) or GF(4). Coordinates are 1-based in user-facing
/// results (support sets); storage is 0-based.
class FieldVector {
public:
    FieldVector() = default;
    FieldVector(Field f, std::size_t n) : field_(f), symbols_(n, 0) {}
    FieldVector(Field f, std::vector<Symbol> symbols) : field_(f), symbols_(std::move(symbols)) {
        for (Symbol s : symbols_)
            if (!valid_symbol(f, s)) throw std::invalid_argument("symbol out of range for field");
    }

    /// Parses a comma-separated token list such as "1,w,0,w2".
    static FieldVector parse(Field f, std::string_view text) {
        std::vector<Symbol> out;
        if (!text.empty()) {
            std::size_t pos = 0;
            while (true) {
                std::size_t comma = text.find(',', pos);
                out.push_back(parse_symbol(f, text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        return {f, std::move(out)};
    }

    Field field() const { return field_; }
    std::size_t size() const { return symbols_.size(); }
    std::span<const Symbol> symbols() const { return symbols_; }
    std::span<Symbol> symbols() { return symbols_; }

    FieldElement operator[](std::size_t i) const { return {field_, symbols_.at(i)}; }
    void set(std::size_t i, const FieldElement& e) {
        if (e.field() != field_) throw std::invalid_argument("mixed-field operation");
        symbols_.at(i) = e.value();
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (Symbol s : symbols_) w += (s != 0);
        return w;
    }

    /// 1-based indices of the nonzero coordinates.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] != 0) out.push_back(i + 1);
        return out;
    }

    bool is_zero() const { return weight() == 0; }

    FieldVector scaled(const FieldElement& c) const {
        if (c.field() != field_) throw std::invalid_argument("mixed-field operation");
        FieldVector r(*this);
        for (Symbol& s : r.symbols_) s = sym_mul(field_, s, c.value());
        return r;
    }

    FieldVector operator+(const FieldVector& o) const {
        check_compatible(o);
        FieldVector r(*this);
        for (std::size_t i = 0; i < size(); ++i) r.symbols_[i] = sym_add(field_, symbols_[i], o.symbols_[i]);
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) s += ',';
            s += symbol_token(field_, symbols_[i]);
        }
        return s;
    }

    bool operator==(const FieldVector&) const = default;
    auto operator<=>(const FieldVector& o) const {
        if (field_ != o.field_) return field_ <=> o.field_;
        return symbols_ <=> o.symbols_;
    }

    void check_compatible(const FieldVector& o) const {
        if (o.field_ != field_) throw std::invalid_argument("mixed-field operation");
        if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
    }

private:
    Field field_ = Field::F3;
    std::vector<Symbol> symbols_;
};

struct WeightSupport {
    std::size_t weight = 0;
    std::vector<std::size_t> support;  // 1-based
};

inline WeightSupport weight_support(const FieldVector& x) { return {x.weight(), x.support()}; }

/// <x,y>_E = sum x_i y_i (GF(3)) or <x,y>_H = sum x_i y_i^2 (GF(4)).
inline FieldElement inner_product(const FieldVector& x, const FieldVector& y, Form form) {
    x.check_compatible(y);
    require_form(x.field(), form);
    const Field f = x.field();
    Symbol acc = 0;
    auto xs = x.symbols();
    auto ys = y.symbols();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Symbol yi = form == Form::Hermitian ? sym_conj(ys[i]) : ys[i];
        acc = sym_add(f, acc, sym_mul(f, xs[i], yi));
    }
    return {f, acc};
}

}  // namespace selfdual
