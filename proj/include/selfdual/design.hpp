#pragma once
// Supports of codewords as block designs: scalar-class deduplication, the
// 1-design test, and the mod-8 / mod-9 count of minimum-weight codewords of
// near-extremal codes.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "code.hpp"
#include "enumerate.hpp"
#include "field.hpp"

namespace selfdual {

/// One representative per orbit {c x : c != 0}: the multiple whose first
/// nonzero coordinate is 1. Output is sorted.
inline std::vector<FieldVector> scalar_classes(const std::vector<FieldVector>& words) {
    std::set<FieldVector> reps;
    for (const auto& w : words) {
        w.check_compatible(words.front());
        auto s = w.symbols();
        auto it = std::find_if(s.begin(), s.end(), [](Symbol v) { return v != 0; });
        if (it == s.end()) throw std::invalid_argument("scalar_classes: zero vector");
        reps.insert(w.scaled(FieldElement(w.field(), sym_inv(w.field(), *it))));
    }
    return {reps.begin(), reps.end()};
}

/// True when no two of the given class representatives share a support.
inline bool supports_distinct(const std::vector<FieldVector>& reps) {
    std::set<std::vector<std::size_t>> seen;
    for (const auto& r : reps)
        if (!seen.insert(r.support()).second) return false;
    return true;
}

struct DesignInstance {
    std::size_t v = 0;  // points
    std::size_t k = 0;  // block size
    std::size_t b = 0;  // blocks, counted with multiplicity
    std::optional<std::size_t> r;                  // replication number if constant
    std::vector<std::vector<std::size_t>> blocks;  // sorted 1-based supports

    bool is_1_design() const { return r.has_value() && b * k == v * *r; }
};

/// Blocks are the supports of the words, one per scalar class (repeats kept).
inline DesignInstance design_from_words(std::size_t n, std::size_t w, const std::vector<FieldVector>& words) {
    DesignInstance d;
    d.v = n;
    d.k = w;
    for (const auto& rep : scalar_classes(words)) {
        if (rep.size() != n || rep.weight() != w) throw std::invalid_argument("design_from_words: word of wrong shape");
        d.blocks.push_back(rep.support());
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    d.b = d.blocks.size();
    std::vector<std::size_t> incidence(n, 0);
    for (const auto& blk : d.blocks)
        for (std::size_t p : blk) ++incidence[p - 1];
    if (d.b > 0 && std::all_of(incidence.begin(), incidence.end(), [&](std::size_t x) { return x == incidence[0]; }))
        d.r = incidence.empty() ? 0 : incidence[0];
    return d;
}

/// Enumerates the weight-w codewords (full enumeration or an exhaustive
/// low-weight search) and tests their supports for the 1-design property.
inline DesignInstance one_design_check(const LinearCode& code, std::size_t w, const EnumerationOptions& opt = {}) {
    return design_from_words(code.length(), w, codewords_of_weight(code, w, opt));
}

struct LemmaReport {
    Field field = Field::F3;
    std::size_t n = 0;
    std::size_t min_weight = 0;
    BigInt count = 0;         // number of minimum-weight codewords
    unsigned modulus = 8;
    bool divisible = false;   // count = 0 mod modulus
    std::optional<BigInt> r;  // (count/class) * d / n when that is an integer
    std::vector<std::string> problems;

    bool passed() const { return problems.empty(); }
};

/// For a near-extremal self-dual code of length 12m / 6m with A_d
/// minimum-weight codewords (d = 3m / 2m): A_d is divisible by 8 / 9, and the
/// 1-design on the A_d/2 (A_d/3) minimum-weight supports has replication
/// number r = (A_d/2) d / n (resp. (A_d/3) d / n), which must be an integer.
inline LemmaReport lemma_check(Field f, std::size_t n, std::size_t min_weight, const BigInt& count) {
    LemmaReport rep;
    rep.field = f;
    rep.n = n;
    rep.min_weight = min_weight;
    rep.count = count;
    rep.modulus = f == Field::F3 ? 8 : 9;
    const std::size_t unit = f == Field::F3 ? 12 : 6;
    const std::size_t step = f == Field::F3 ? 3 : 2;
    if (n == 0 || n % unit != 0) {
        rep.problems.push_back("length " + std::to_string(n) + " is not a multiple of " + std::to_string(unit));
        return rep;
    }
    if (min_weight != step * (n / unit))
        rep.problems.push_back("minimum weight " + std::to_string(min_weight) + " is not the near-extremal value " +
                               std::to_string(step * (n / unit)));
    if (count <= 0) rep.problems.push_back("no minimum-weight codewords");
    rep.divisible = count % rep.modulus == 0;
    if (!rep.divisible)
        rep.problems.push_back("A_" + std::to_string(min_weight) + " = " + to_decimal(count) + " is not divisible by " +
                               std::to_string(rep.modulus));
    const unsigned cls = f == Field::F3 ? 2 : 3;
    const BigInt num = count * min_weight;
    const BigInt den = BigInt(cls) * n;
    if (count % cls == 0 && num % den == 0 && num > 0)
        rep.r = num / den;
    else
        rep.problems.push_back("replication number (A/" + std::to_string(cls) + ")*" + std::to_string(min_weight) + "/" +
                               std::to_string(n) + " is not a positive integer");
    return rep;
}

inline LemmaReport lemma_check(const LinearCode& code, const WeightEnumerator& e) {
    const auto d = e.min_weight();
    return lemma_check(code.field(), code.length(), d.value_or(0), d ? e.at(*d) : BigInt(0));
}

inline LemmaReport lemma_check(const LinearCode& code, const EnumerationOptions& opt = {}) {
    return lemma_check(code, weight_enumerator_full(code, opt));
}

}  // namespace selfdual
