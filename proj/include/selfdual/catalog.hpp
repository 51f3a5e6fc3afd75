#pragma once
// Line-oriented catalog of named constructions.
//
//   <id> <family> <field> <length> key=value... [expect key=value...]
//
// Families and their parameters:
//   four_circ, four_negacirc   rA, rB          (length n/4 each)
//   bordered_dcc               rA              (length n/2 - 1)
//   mu_circ                    mu, rA          (length n/2)
//   ito                        rA, rB, rC, rD  (F3, n = 72, length 9 each)
//   neighbor                   base, x         (x has length n/2)
//   direct_sum                 parts           (ids joined by '+')
//   reference                  none; records a reported alpha only
// Expectations: alpha, self_dual, min_weight, A<w>, check=optional, cite.
// Lines starting with '#' and blank lines are comments and are kept with the
// entry that follows them.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "code.hpp"
#include "constructions.hpp"
#include "field.hpp"

namespace selfdual {

enum class Family { FourCirc, FourNegacirc, BorderedDcc, MuCirc, Ito, Neighbor, DirectSum, Reference };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::FourCirc: return "four_circ";
        case Family::FourNegacirc: return "four_negacirc";
        case Family::BorderedDcc: return "bordered_dcc";
        case Family::MuCirc: return "mu_circ";
        case Family::Ito: return "ito";
        case Family::Neighbor: return "neighbor";
        case Family::DirectSum: return "direct_sum";
        case Family::Reference: return "reference";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::FourCirc, Family::FourNegacirc, Family::BorderedDcc, Family::MuCirc, Family::Ito,
                     Family::Neighbor, Family::DirectSum, Family::Reference})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

class CatalogError : public std::runtime_error {
public:
    CatalogError(std::size_t line, const std::string& msg)
        : std::runtime_error("catalog line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct Expectations {
    std::optional<BigInt> alpha;
    std::optional<bool> self_dual;
    std::optional<std::size_t> min_weight;
    std::map<std::size_t, BigInt> counts;  // A<w>=...
    bool optional = false;                 // check=optional
    std::string cite;

    bool empty() const { return !alpha && !self_dual && !min_weight && counts.empty() && !optional && cite.empty(); }
};

struct CatalogEntry {
    std::string id;
    Family family = Family::FourCirc;
    Field field = Field::F3;
    std::size_t length = 0;
    std::map<std::string, std::string> params;
    Expectations expect;
    std::vector<std::string> comments;  // comment and blank lines preceding the entry
    std::size_t line = 0;

    const std::string& param(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) throw std::out_of_range(id + ": missing parameter " + key);
        return it->second;
    }

    /// Ids this entry is built from (neighbor base, direct-sum parts).
    std::vector<std::string> dependencies() const {
        if (family == Family::Neighbor) return {param("base")};
        if (family == Family::DirectSum) {
            std::vector<std::string> out;
            std::string_view s = param("parts");
            std::size_t pos = 0;
            for (;;) {
                const std::size_t plus = s.find('+', pos);
                out.emplace_back(s.substr(pos, plus == std::string_view::npos ? plus : plus - pos));
                if (plus == std::string_view::npos) break;
                pos = plus + 1;
            }
            return out;
        }
        return {};
    }
};

class Catalog {
public:
    std::vector<CatalogEntry> entries;
    std::vector<std::string> trailing_comments;

    const CatalogEntry* find(std::string_view id) const {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }

    const CatalogEntry& at(std::string_view id) const {
        if (const auto* e = find(id)) return *e;
        throw std::out_of_range("no catalog entry '" + std::string(id) + "'");
    }

    /// Resolves "ID" or "FIRST..LAST" (inclusive, in file order) to ids.
    std::vector<std::string> select(std::string_view spec) const {
        const std::size_t dots = spec.find("..");
        if (dots == std::string_view::npos) return {at(spec).id};
        const auto first = spec.substr(0, dots), last = spec.substr(dots + 2);
        auto pos = [&](std::string_view id) {
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (entries[i].id == id) return i;
            throw std::out_of_range("no catalog entry '" + std::string(id) + "'");
        };
        const std::size_t a = pos(first), b = pos(last);
        if (a > b) throw std::invalid_argument("range " + std::string(spec) + " runs backwards");
        std::vector<std::string> out;
        for (std::size_t i = a; i <= b; ++i) out.push_back(entries[i].id);
        return out;
    }
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<std::size_t> parse_size(std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline std::optional<BigInt> parse_bigint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return std::nullopt;
    return from_decimal(std::string(s));
}

struct ParamRule {
    std::vector<std::string> keys;
};

inline ParamRule param_rule(Family f) {
    switch (f) {
        case Family::FourCirc:
        case Family::FourNegacirc: return {{"rA", "rB"}};
        case Family::BorderedDcc: return {{"rA"}};
        case Family::MuCirc: return {{"mu", "rA"}};
        case Family::Ito: return {{"rA", "rB", "rC", "rD"}};
        case Family::Neighbor: return {{"base", "x"}};
        case Family::DirectSum: return {{"parts"}};
        case Family::Reference: return {{}};
    }
    return {};
}

inline const std::vector<std::string>& param_order() {
    static const std::vector<std::string> order{"mu", "rA", "rB", "rC", "rD", "base", "x", "parts"};
    return order;
}

inline void check_row(const CatalogEntry& e, const std::string& key, std::size_t expected_len) {
    FieldVector v;
    try {
        v = FieldVector::parse(e.field, e.param(key));
    } catch (const std::exception& ex) {
        throw CatalogError(e.line, e.id + ": " + key + ": " + ex.what());
    }
    if (v.size() != expected_len)
        throw CatalogError(e.line, e.id + ": " + key + " has " + std::to_string(v.size()) + " symbols, expected " +
                                       std::to_string(expected_len));
}

inline void validate_entry(const CatalogEntry& e, const std::map<std::string, const CatalogEntry*>& earlier) {
    const std::size_t n = e.length;
    auto need = [&](bool ok, const std::string& msg) {
        if (!ok) throw CatalogError(e.line, e.id + ": " + msg);
    };
    switch (e.family) {
        case Family::FourCirc:
        case Family::FourNegacirc:
            need(n % 4 == 0 && n > 0, "four-block codes need a length divisible by 4");
            check_row(e, "rA", n / 4);
            check_row(e, "rB", n / 4);
            break;
        case Family::BorderedDcc:
            need(n % 2 == 0 && n >= 4, "bordered double circulant codes need an even length >= 4");
            check_row(e, "rA", n / 2 - 1);
            break;
        case Family::MuCirc: {
            need(n % 2 == 0 && n > 0, "mu-circulant codes need an even length");
            Symbol mu = 0;
            try {
                mu = parse_symbol(e.field, e.param("mu"));
            } catch (const std::exception& ex) {
                throw CatalogError(e.line, e.id + ": mu: " + ex.what());
            }
            need(mu != 0, "mu must be nonzero");
            check_row(e, "rA", n / 2);
            break;
        }
        case Family::Ito:
            need(e.field == Field::F3 && n == 72, "ito entries are ternary of length 72");
            for (const char* k : {"rA", "rB", "rC", "rD"}) check_row(e, k, 9);
            break;
        case Family::Neighbor: {
            need(n % 2 == 0, "neighbor entries need an even length");
            check_row(e, "x", n / 2);
            break;
        }
        case Family::DirectSum:
        case Family::Reference: break;
    }
    std::size_t total = 0;
    for (const auto& dep : e.dependencies()) {
        auto it = earlier.find(dep);
        if (it == earlier.end()) throw CatalogError(e.line, e.id + ": unknown base '" + dep + "'");
        const CatalogEntry& b = *it->second;
        need(b.family != Family::Reference, "base '" + dep + "' has no generator");
        need(b.field == e.field, "base '" + dep + "' is over another field");
        total += b.length;
        if (e.family == Family::Neighbor) need(b.length == n, "base '" + dep + "' has another length");
    }
    if (e.family == Family::DirectSum) need(total == n, "parts do not add up to the length");
    need(e.expect.empty() || !e.expect.cite.empty(), "expectations need a cite=... source");
}

}  // namespace detail

inline CatalogEntry parse_catalog_line(std::string_view line, std::size_t line_no) {
    const auto tok = detail::split_ws(line);
    if (tok.size() < 4) throw CatalogError(line_no, "expected '<id> <family> <field> <length> ...'");
    CatalogEntry e;
    e.line = line_no;
    e.id = std::string(tok[0]);
    const auto fam = parse_family(tok[1]);
    if (!fam) throw CatalogError(line_no, "unknown family '" + std::string(tok[1]) + "'");
    e.family = *fam;
    if (tok[2] != "F3" && tok[2] != "F4") throw CatalogError(line_no, "unknown field '" + std::string(tok[2]) + "'");
    e.field = parse_field(tok[2]);
    const auto n = detail::parse_size(tok[3]);
    if (!n || *n == 0) throw CatalogError(line_no, "invalid length '" + std::string(tok[3]) + "'");
    e.length = *n;

    const auto rule = detail::param_rule(e.family);
    bool in_expect = false;
    for (std::size_t i = 4; i < tok.size(); ++i) {
        if (tok[i] == "expect") {
            if (in_expect) throw CatalogError(line_no, "repeated 'expect'");
            in_expect = true;
            continue;
        }
        const std::size_t eq = tok[i].find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == tok[i].size())
            throw CatalogError(line_no, "expected key=value, got '" + std::string(tok[i]) + "'");
        const std::string key(tok[i].substr(0, eq));
        const std::string_view val = tok[i].substr(eq + 1);
        if (!in_expect) {
            if (std::find(rule.keys.begin(), rule.keys.end(), key) == rule.keys.end())
                throw CatalogError(line_no, "parameter '" + key + "' does not apply to " +
                                                std::string(family_name(e.family)));
            if (!e.params.emplace(key, std::string(val)).second)
                throw CatalogError(line_no, "repeated parameter '" + key + "'");
            continue;
        }
        Expectations& x = e.expect;
        if (key == "alpha") {
            const auto v = detail::parse_bigint(val);
            if (!v || *v < 0 || x.alpha) throw CatalogError(line_no, "invalid alpha");
            x.alpha = *v;
        } else if (key == "self_dual") {
            if ((val != "true" && val != "false") || x.self_dual) throw CatalogError(line_no, "invalid self_dual");
            x.self_dual = val == "true";
        } else if (key == "min_weight") {
            const auto v = detail::parse_size(val);
            if (!v || x.min_weight) throw CatalogError(line_no, "invalid min_weight");
            x.min_weight = *v;
        } else if (key.size() > 1 && key[0] == 'A' && detail::parse_size(std::string_view(key).substr(1))) {
            const std::size_t w = *detail::parse_size(std::string_view(key).substr(1));
            const auto v = detail::parse_bigint(val);
            if (!v || *v < 0 || w > e.length || x.counts.count(w)) throw CatalogError(line_no, "invalid " + key);
            x.counts.emplace(w, *v);
        } else if (key == "check") {
            if (val != "optional") throw CatalogError(line_no, "check must be 'optional'");
            x.optional = true;
        } else if (key == "cite") {
            x.cite = std::string(val);
        } else {
            throw CatalogError(line_no, "unknown expectation '" + key + "'");
        }
    }
    for (const auto& k : rule.keys)
        if (!e.params.count(k)) throw CatalogError(line_no, "missing parameter '" + k + "'");
    return e;
}

inline Catalog parse_catalog(std::istream& in) {
    Catalog cat;
    std::map<std::string, const CatalogEntry*> seen;
    std::vector<std::string> pending;
    std::string raw;
    std::size_t line_no = 0;
    // entries are validated as they arrive; pointers into the vector are
    // refreshed after each push
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') {
            pending.push_back(raw);
            continue;
        }
        CatalogEntry e = parse_catalog_line(raw, line_no);
        if (seen.count(e.id)) throw CatalogError(line_no, "duplicate id '" + e.id + "'");
        detail::validate_entry(e, seen);
        e.comments = std::move(pending);
        pending.clear();
        cat.entries.push_back(std::move(e));
        seen.clear();
        for (const auto& x : cat.entries) seen.emplace(x.id, &x);
    }
    cat.trailing_comments = std::move(pending);
    return cat;
}

inline Catalog parse_catalog(const std::string& text) {
    std::istringstream in(text);
    return parse_catalog(in);
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog '" + path + "'");
    return parse_catalog(in);
}

/// Canonical one-line form of an entry.
inline std::string serialize_entry(const CatalogEntry& e) {
    std::string s = e.id + ' ' + std::string(family_name(e.family)) + ' ' + std::string(field_name(e.field)) + ' ' +
                    std::to_string(e.length);
    for (const auto& k : detail::param_order()) {
        auto it = e.params.find(k);
        if (it != e.params.end()) s += ' ' + k + '=' + it->second;
    }
    const Expectations& x = e.expect;
    if (!x.empty()) {
        s += " expect";
        if (x.alpha) s += " alpha=" + to_decimal(*x.alpha);
        if (x.self_dual) s += std::string(" self_dual=") + (*x.self_dual ? "true" : "false");
        if (x.min_weight) s += " min_weight=" + std::to_string(*x.min_weight);
        for (const auto& [w, c] : x.counts) s += " A" + std::to_string(w) + '=' + to_decimal(c);
        if (x.optional) s += " check=optional";
        if (!x.cite.empty()) s += " cite=" + x.cite;
    }
    return s;
}

inline std::string serialize_catalog(const Catalog& cat) {
    std::string out;
    for (const auto& e : cat.entries) {
        for (const auto& c : e.comments) out += c + '\n';
        out += serialize_entry(e) + '\n';
    }
    for (const auto& c : cat.trailing_comments) out += c + '\n';
    return out;
}

/// Builds the codes of catalog entries, memoizing bases.
class CodeBuilder {
public:
    explicit CodeBuilder(const Catalog& cat) : cat_(cat) {}

    const LinearCode& build(const std::string& id) {
        if (auto it = cache_.find(id); it != cache_.end()) return it->second;
        const CatalogEntry& e = cat_.at(id);
        return cache_.emplace(id, construct(e)).first->second;
    }

    bool has_generator(const std::string& id) const { return cat_.at(id).family != Family::Reference; }

private:
    LinearCode construct(const CatalogEntry& e) {
        const Field f = e.field;
        auto row = [&](const char* k) { return FieldVector::parse(f, e.param(k)); };
        switch (e.family) {
            case Family::FourCirc: return four_block_code(row("rA"), row("rB"), FieldElement::one(f));
            case Family::FourNegacirc: return four_block_code(row("rA"), row("rB"), -FieldElement::one(f));
            case Family::BorderedDcc: return bordered_dcc(row("rA"));
            case Family::MuCirc: return mu_circulant_code(FieldElement(f, parse_symbol(f, e.param("mu"))), row("rA"));
            case Family::Ito: return ito_array_code(row("rA"), row("rB"), row("rC"), row("rD"));
            case Family::Neighbor: {
                const LinearCode base = build(e.param("base"));
                return neighbor(base, row("x"), natural_form(f));
            }
            case Family::DirectSum: {
                LinearCode acc(f, 0);
                for (const auto& p : e.dependencies()) acc = direct_sum(acc, build(p));
                return acc;
            }
            case Family::Reference: break;
        }
        throw std::invalid_argument(e.id + ": no generator is recorded for this entry");
    }

    const Catalog& cat_;
    std::map<std::string, LinearCode> cache_;
};

}  // namespace selfdual
