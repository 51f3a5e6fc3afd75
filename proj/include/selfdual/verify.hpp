#pragma once
// Verification of catalog entries against their recorded expectations.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "catalog.hpp"
#include "code.hpp"
#include "design.hpp"
#include "enumerate.hpp"
#include "gleason.hpp"

namespace selfdual {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string expected;
    std::string got;
    std::string cite;
};

struct EntryReport {
    std::string id;
    std::vector<CheckResult> checks;

    bool failed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return true;
        return false;
    }

    const CheckResult* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

struct VerifyOptions {
    EnumerationOptions enumeration;
};

/// What could be measured about a code's low-weight distribution.
struct Measurement {
    enum class Route { None, Full, LowWeight } route = Route::None;
    std::optional<WeightEnumerator> full;   // set for Route::Full
    std::optional<LowWeightResult> low;     // set for Route::LowWeight
    std::vector<FieldVector> words;         // codewords of the collected weight
    std::size_t collected_weight = 0;
    std::string reason;                     // why nothing was measured

    /// Exact A_w, when known.
    std::optional<BigInt> count(std::size_t w) const {
        if (full) return full->at(w);
        if (low && low->is_exact(w) && w <= low->w_max) return low->counts[w];
        return std::nullopt;
    }

    std::optional<std::size_t> min_weight() const {
        if (full) return full->min_weight();
        if (low) return low->min_weight;
        return std::nullopt;
    }

    bool words_complete() const { return count(collected_weight).has_value(); }
};

/// Near-extremal minimum weight 3m / 2m, if n is a multiple of 12 / 6.
inline std::optional<std::size_t> near_extremal_weight(Field f, std::size_t n) {
    if (n == 0 || n % length_per_m(f) != 0) return std::nullopt;
    return weight_step(f) * (n / length_per_m(f));
}

/// Full enumeration when q^k fits the budget, otherwise a low-weight search up
/// to w_max. Codewords of weight `collect` are kept.
inline Measurement measure(const LinearCode& code, std::size_t w_max, std::size_t collect,
                           const EnumerationOptions& opt) {
    Measurement m;
    m.collected_weight = collect;
    if (codeword_count(code.field(), code.dimension()) <= opt.budget) {
        auto fe = enumerate_codewords(code, opt, collect);
        m.route = Measurement::Route::Full;
        m.full = std::move(fe.enumerator);
        m.words = std::move(fe.words);
        return m;
    }
    auto low = count_low_weight(code, std::min(w_max, code.length()), opt, collect);
    if (low.exact_below == 0) {
        m.reason = "budget";
        return m;
    }
    m.route = Measurement::Route::LowWeight;
    m.words = std::move(low.words);
    m.low = std::move(low);
    return m;
}

namespace detail {

inline CheckResult check(std::string name, bool ok, std::string expected, std::string got, const std::string& cite) {
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected), std::move(got), cite};
}

inline CheckResult skipped(std::string name, std::string expected, std::string why, const std::string& cite) {
    return {std::move(name), CheckStatus::Skipped, std::move(expected), "skipped: " + std::move(why), cite};
}

}  // namespace detail

/// Checks a built code against the expectations of its entry. The
/// measurement, when given, is reused instead of enumerating again.
inline EntryReport verify_code(const CatalogEntry& e, const LinearCode& code, const Measurement& meas) {
    using detail::check;
    using detail::skipped;
    EntryReport rep;
    rep.id = e.id;
    const Expectations& x = e.expect;
    const std::string& cite = x.cite;
    const auto d_ne = near_extremal_weight(e.field, e.length);

    rep.checks.push_back(check("length", code.length() == e.length, std::to_string(e.length),
                               std::to_string(code.length()), cite));
    const bool sd = is_self_dual(code);
    const bool sd_expected = x.self_dual.value_or(true);
    rep.checks.push_back(check("self_dual", sd == sd_expected, sd_expected ? "true" : "false", sd ? "true" : "false",
                               cite));

    const std::string why = meas.reason.empty() ? "budget" : meas.reason;
    const auto dmin = meas.min_weight();

    if (x.min_weight) {
        const std::string ex = std::to_string(*x.min_weight);
        if (dmin)
            rep.checks.push_back(check("min_weight", *dmin == *x.min_weight, ex, std::to_string(*dmin), cite));
        else if (meas.low && meas.low->exact_below > *x.min_weight)
            rep.checks.push_back(check("min_weight", false, ex, "> " + std::to_string(meas.low->exact_below - 1), cite));
        else
            rep.checks.push_back(skipped("min_weight", ex, why, cite));
    }

    if (x.alpha) {
        const std::string ex = to_decimal(*x.alpha);
        if (!d_ne) {
            rep.checks.push_back(check("alpha", false, ex, "length is not a multiple of " +
                                                               std::to_string(length_per_m(e.field)), cite));
        } else if (dmin && *dmin < *d_ne) {
            rep.checks.push_back(check("alpha", false, ex, "min_weight=" + std::to_string(*dmin), cite));
        } else if (auto c = meas.count(*d_ne)) {
            rep.checks.push_back(check("alpha", *c == *x.alpha, ex, to_decimal(*c), cite));
        } else {
            rep.checks.push_back(skipped("alpha", ex, why, cite));
        }
    }

    for (const auto& [w, want] : x.counts) {
        const std::string name = "A" + std::to_string(w);
        if (auto c = meas.count(w))
            rep.checks.push_back(check(name, *c == want, to_decimal(want), to_decimal(*c), cite));
        else
            rep.checks.push_back(skipped(name, to_decimal(want), why, cite));
    }

    if (x.alpha) {
        const unsigned mod = near_extremal_modulus(e.field);
        rep.checks.push_back(check("modulus", *x.alpha % mod == 0, "alpha = 0 mod " + std::to_string(mod),
                                   to_decimal(*x.alpha % mod), cite));
        if (d_ne) {
            const std::size_t m = e.length / length_per_m(e.field);
            if (m <= near_extremal_max_m(e.field)) {
                const auto r = alpha_range(e.field, m);
                rep.checks.push_back(check("alpha_range", r.contains_alpha(*x.alpha),
                                           "[" + to_decimal(r.alpha_min()) + ", " + to_decimal(r.alpha_max()) + "]",
                                           to_decimal(*x.alpha), cite));
            }
        }
    }

    // Measured near-extremal data: divisibility and the 1-design property.
    if (d_ne && dmin && *dmin == *d_ne) {
        const BigInt a = *meas.count(*d_ne);
        const auto lem = lemma_check(e.field, e.length, *d_ne, a);
        std::string got = "A" + std::to_string(*d_ne) + "=" + to_decimal(a);
        if (lem.r) got += " r=" + to_decimal(*lem.r);
        rep.checks.push_back(check("lemma", lem.passed(), "A = 0 mod " + std::to_string(lem.modulus) + ", r integral",
                                   got, cite));
        if (meas.collected_weight == *d_ne && meas.words_complete()) {
            const auto reps = scalar_classes(meas.words);
            const auto des = design_from_words(e.length, *d_ne, meas.words);
            const bool ok = des.is_1_design() && supports_distinct(reps);
            std::string g = "b=" + std::to_string(des.b);
            g += des.r ? " r=" + std::to_string(*des.r) : std::string(" r=non-constant");
            if (!supports_distinct(reps)) g += " repeated supports";
            rep.checks.push_back(check("design_1", ok, "1-(" + std::to_string(e.length) + "," +
                                                           std::to_string(*d_ne) + ",r) design",
                                       g, cite));
        }
        if (meas.full) {
            const std::size_t m = e.length / length_per_m(e.field);
            if (m <= near_extremal_max_m(e.field)) {
                const bool ok = parametric_near_extremal(e.field, m).evaluate(a) == *meas.full;
                rep.checks.push_back(check("parametric", ok, "enumerator at alpha=" + to_decimal(a),
                                           ok ? "match" : "mismatch", cite));
            }
        }
    }
    return rep;
}

/// Builds and checks one entry.
inline EntryReport verify_entry(CodeBuilder& builder, const CatalogEntry& e, const VerifyOptions& opt = {}) {
    EntryReport rep;
    rep.id = e.id;
    const std::string& cite = e.expect.cite;
    if (e.family == Family::Reference) {
        rep.checks.push_back(detail::skipped("construct", "generator", "no generator recorded", cite));
        const unsigned mod = near_extremal_modulus(e.field);
        if (e.expect.alpha) {
            const BigInt& alpha = *e.expect.alpha;
            rep.checks.push_back(detail::check("modulus", alpha % mod == 0, "alpha = 0 mod " + std::to_string(mod),
                                               to_decimal(alpha % mod), cite));
            const auto d_ne = near_extremal_weight(e.field, e.length);
            const std::size_t m = d_ne ? e.length / length_per_m(e.field) : 0;
            if (d_ne && m <= near_extremal_max_m(e.field)) {
                const auto r = alpha_range(e.field, m);
                rep.checks.push_back(detail::check(
                    "alpha_range", r.contains_alpha(alpha),
                    "[" + to_decimal(r.alpha_min()) + ", " + to_decimal(r.alpha_max()) + "]", to_decimal(alpha), cite));
            }
        }
        return rep;
    }
    const LinearCode* code = nullptr;
    try {
        code = &builder.build(e.id);
    } catch (const std::exception& ex) {
        rep.checks.push_back({"construct", CheckStatus::Fail, "generator", ex.what(), cite});
        return rep;
    }
    rep.checks.push_back({"construct", CheckStatus::Pass, "generator",
                          "[" + std::to_string(code->length()) + "," + std::to_string(code->dimension()) + "]", cite});

    const auto d_ne = near_extremal_weight(e.field, e.length);
    std::size_t w_max = d_ne.value_or(0);
    if (e.expect.min_weight) w_max = std::max(w_max, *e.expect.min_weight);
    for (const auto& [w, c] : e.expect.counts) w_max = std::max(w_max, w);
    Measurement meas;
    const bool needs_measure = e.expect.alpha || e.expect.min_weight || !e.expect.counts.empty();
    if (needs_measure && is_self_dual(*code))
        meas = measure(*code, w_max, d_ne.value_or(0), opt.enumeration);
    else
        meas.reason = needs_measure ? "not self-dual" : "nothing to measure";
    auto body = verify_code(e, *code, meas);
    rep.checks.insert(rep.checks.end(), body.checks.begin(), body.checks.end());
    return rep;
}

inline nlohmann::json to_json(const CheckResult& c) {
    return {{"name", c.name},
            {"status", status_name(c.status)},
            {"expected", c.expected},
            {"got", c.got},
            {"cite", c.cite}};
}

inline nlohmann::json to_json(const EntryReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"id", r.id}, {"checks", checks}};
}

}  // namespace selfdual
