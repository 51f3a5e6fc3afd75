// Command-line front end: construct, enumerate, gleason, verify, design,
// neighbor and catalog subcommands over the shipped catalog.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <selfdual/selfdual.hpp>

#ifndef SELFDUAL_DEFAULT_CATALOG
#define SELFDUAL_DEFAULT_CATALOG "data/catalog.txt"
#endif

using namespace selfdual;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t budget = EnumerationOptions{}.budget;
    unsigned threads = 1;
    std::string json_path;
    std::string catalog_path = SELFDUAL_DEFAULT_CATALOG;

    EnumerationOptions enumeration() const { return {budget, threads}; }
};

// Set when --json - moves the text report to stderr.
std::streambuf* json_stdout = nullptr;

void write_json(const Globals& g, const json& j) {
    if (g.json_path.empty()) return;
    if (g.json_path == "-") {
        std::ostream out(json_stdout ? json_stdout : std::cout.rdbuf());
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(g.json_path);
    if (!out) throw UsageError("cannot write " + g.json_path);
    out << j.dump(2) << '\n';
}

Catalog load(const Globals& g) { return load_catalog(g.catalog_path); }

const CatalogEntry& entry_or_usage(const Catalog& cat, const std::string& id) {
    const auto* e = cat.find(id);
    if (!e) throw UsageError("no catalog entry '" + id + "'");
    return *e;
}

json enumerator_json(const WeightEnumerator& e) {
    json counts = json::object();
    for (std::size_t w = 0; w < e.counts.size(); ++w)
        if (e.counts[w] != 0) counts[std::to_string(w)] = to_decimal(e.counts[w]);
    return counts;
}

void print_enumerator(const WeightEnumerator& e) {
    for (std::size_t w = 0; w < e.counts.size(); ++w)
        if (e.counts[w] != 0) std::cout << "A" << w << " = " << to_decimal(e.counts[w]) << '\n';
}

// --- construct ---------------------------------------------------------

int run_construct(const Globals& g, const std::string& id, bool show_matrix) {
    const Catalog cat = load(g);
    const auto& e = entry_or_usage(cat, id);
    CodeBuilder b(cat);
    const LinearCode& c = b.build(e.id);
    const bool sd = is_self_dual(c);
    std::cout << e.id << ": [" << c.length() << "," << c.dimension() << "] over " << field_name(c.field()) << ", "
              << form_name(natural_form(c.field())) << " self-dual: " << (sd ? "yes" : "no") << '\n';
    json rows = json::array();
    for (const auto& r : c.generator().row_vectors()) {
        if (show_matrix) std::cout << r.to_string() << '\n';
        rows.push_back(r.to_string());
    }
    write_json(g, {{"id", e.id}, {"n", c.length()}, {"k", c.dimension()}, {"self_dual", sd}, {"generator", rows}});
    return sd ? kExitPass : kExitFail;
}

// --- enumerate ---------------------------------------------------------

int run_enumerate(const Globals& g, const std::string& id, std::optional<std::size_t> w_max) {
    const Catalog cat = load(g);
    const auto& e = entry_or_usage(cat, id);
    CodeBuilder b(cat);
    const LinearCode& c = b.build(e.id);
    if (!w_max) {
        const auto we = weight_enumerator_full(c, g.enumeration());
        std::cout << e.id << ": full weight enumerator (" << field_name(c.field()) << ", n=" << c.length() << ")\n";
        print_enumerator(we);
        write_json(g, {{"id", e.id}, {"method", "full"}, {"counts", enumerator_json(we)}});
        return kExitPass;
    }
    const auto low = count_low_weight(c, *w_max, g.enumeration());
    std::cout << e.id << ": low-weight search up to " << *w_max << ", depth " << low.depth << ", "
              << low.information_sets << " information sets, " << low.enumerated << " messages\n";
    std::cout << "exact below weight " << low.exact_below << '\n';
    json counts = json::object();
    for (std::size_t w = 1; w <= low.w_max; ++w) {
        if (low.counts[w] == 0) continue;
        std::cout << "A" << w << (low.is_exact(w) ? " = " : " >= ") << to_decimal(low.counts[w]) << '\n';
        counts[std::to_string(w)] = {{"count", to_decimal(low.counts[w])}, {"exact", low.is_exact(w)}};
    }
    if (low.min_weight)
        std::cout << "minimum weight " << *low.min_weight << '\n';
    else
        std::cout << "minimum weight >= " << low.d_certified << '\n';
    json j{{"id", e.id},
           {"method", "low_weight"},
           {"w_max", low.w_max},
           {"exact_below", low.exact_below},
           {"counts", counts}};
    if (low.min_weight) j["min_weight"] = *low.min_weight;
    write_json(g, j);
    return kExitPass;
}

// --- gleason -----------------------------------------------------------

int run_gleason(const Globals& g, const std::string& field_text, std::optional<std::size_t> m_opt, bool divisibility,
                bool range, bool extremal) {
    if (field_text != "F3" && field_text != "F4") throw UsageError("--field must be F3 or F4");
    const Field f = parse_field(field_text);
    const std::size_t max_m = near_extremal_max_m(f);
    if (m_opt && (*m_opt < 1 || *m_opt > max_m))
        throw UsageError("--m must lie in 1.." + std::to_string(max_m) + " for " + field_text);
    std::vector<std::size_t> ms;
    if (m_opt)
        ms.push_back(*m_opt);
    else if (divisibility || extremal)
        for (std::size_t m = 1; m <= max_m; ++m) ms.push_back(m);
    else
        throw UsageError("--m is required");

    bool ok = true;
    json out = json::array();
    for (std::size_t m : ms) {
        const auto pe = parametric_near_extremal(f, m);
        json j{{"field", field_text}, {"m", m}, {"n", pe.n}};
        if (!divisibility && !range && !extremal) {
            std::cout << field_text << " n=" << pe.n << ": A_w = s + t*alpha (columns w, s, t)\n";
            json terms = json::array();
            for (const auto& [w, c] : pe.terms) {
                std::cout << std::setw(5) << w << "  " << to_decimal(c.s) << "  " << to_decimal(c.t) << '\n';
                terms.push_back({{"w", w}, {"s", to_decimal(c.s)}, {"t", to_decimal(c.t)}});
            }
            j["terms"] = terms;
        }
        if (divisibility) {
            const auto d = divisibility_check(pe);
            ok = ok && d.passed();
            std::cout << field_text << " m=" << m << " n=" << pe.n << ": s_w = 0 mod " << d.modulus << " at "
                      << d.checked << " weights: " << (d.passed() ? "pass" : "FAIL") << '\n';
            j["divisibility"] = {{"modulus", d.modulus}, {"checked", d.checked}, {"violations", d.violations}};
        }
        if (range) {
            const auto r = alpha_range(pe);
            if (r.empty())
                std::cout << field_text << " m=" << m << ": no admissible alpha\n";
            else
                std::cout << field_text << " m=" << m << ": beta in [" << to_decimal(r.beta_min) << ", "
                          << to_decimal(r.beta_max) << "], alpha = " << r.modulus << "*beta\n";
            j["alpha_range"] = {{"modulus", r.modulus},
                                {"beta_min", to_decimal(r.beta_min)},
                                {"beta_max", to_decimal(r.beta_max)},
                                {"empty", r.empty()}};
        }
        if (extremal) {
            const auto ex = extremal_enumerator(f, m);
            const bool good = !ex.nonnegative() || ex.divisibility_violations.empty();
            ok = ok && good;
            std::cout << field_text << " m=" << m << " n=" << pe.n << ": extremal enumerator "
                      << (ex.nonnegative() ? "nonnegative" : "has negative coefficients");
            if (ex.nonnegative())
                std::cout << ", divisibility " << (ex.divisibility_violations.empty() ? "pass" : "FAIL");
            std::cout << '\n';
            j["extremal"] = {{"nonnegative", ex.nonnegative()},
                             {"negative_weights", ex.negative_weights},
                             {"divisibility_violations", ex.divisibility_violations}};
        }
        out.push_back(j);
    }
    write_json(g, ms.size() == 1 ? out[0] : out);
    return ok ? kExitPass : kExitFail;
}

// --- verify ------------------------------------------------------------

int run_verify(const Globals& g, const std::vector<std::string>& specs, bool all) {
    const Catalog cat = load(g);
    std::vector<std::string> ids;
    if (all) {
        for (const auto& e : cat.entries) ids.push_back(e.id);
    } else {
        if (specs.empty()) throw UsageError("verify needs entry ids or --all");
        for (const auto& s : specs) {
            std::vector<std::string> sel;
            try {
                sel = cat.select(s);
            } catch (const std::exception& ex) {
                throw UsageError(ex.what());
            }
            ids.insert(ids.end(), sel.begin(), sel.end());
        }
    }
    CodeBuilder builder(cat);
    VerifyOptions opt;
    opt.enumeration = g.enumeration();
    std::size_t pass = 0, fail = 0, skipped = 0, failed_entries = 0;
    json reports = json::array();
    for (const auto& id : ids) {
        const auto rep = verify_entry(builder, cat.at(id), opt);
        for (const auto& c : rep.checks) {
            std::cout << std::left << std::setw(14) << rep.id << std::setw(12) << c.name << std::setw(8)
                      << status_name(c.status) << " expected " << c.expected << ", got " << c.got;
            if (!c.cite.empty()) std::cout << "  [" << c.cite << "]";
            std::cout << '\n';
            if (c.status == CheckStatus::Pass) ++pass;
            if (c.status == CheckStatus::Fail) ++fail;
            if (c.status == CheckStatus::Skipped) ++skipped;
        }
        if (rep.failed()) ++failed_entries;
        reports.push_back(to_json(rep));
        std::cout.flush();
    }
    std::cout << ids.size() << " entries, " << pass << " checks passed, " << fail << " failed, " << skipped
              << " skipped";
    if (failed_entries) std::cout << " (" << failed_entries << " entries with failures)";
    std::cout << '\n';
    write_json(g, reports);
    return fail == 0 ? kExitPass : kExitFail;
}

// --- design ------------------------------------------------------------

int run_design(const Globals& g, const std::string& id, std::optional<std::size_t> weight) {
    const Catalog cat = load(g);
    const auto& e = entry_or_usage(cat, id);
    CodeBuilder b(cat);
    const LinearCode& c = b.build(e.id);
    std::size_t w = 0;
    if (weight) {
        w = *weight;
    } else if (auto d = near_extremal_weight(c.field(), c.length())) {
        w = *d;
    } else {
        throw UsageError("--weight is required for length " + std::to_string(c.length()));
    }
    const auto words = codewords_of_weight(c, w, g.enumeration());
    const auto reps = scalar_classes(words);
    const auto d = design_from_words(c.length(), w, words);
    const bool distinct = supports_distinct(reps);
    std::cout << e.id << ": " << words.size() << " codewords of weight " << w << ", " << reps.size()
              << " scalar classes, supports " << (distinct ? "distinct" : "repeated") << '\n';
    std::cout << "v=" << d.v << " k=" << d.k << " b=" << d.b;
    if (d.r) std::cout << " r=" << *d.r;
    std::cout << ": " << (d.is_1_design() ? "1-design" : "not a 1-design") << '\n';
    json j{{"id", e.id}, {"weight", w},           {"codewords", words.size()}, {"classes", reps.size()},
           {"v", d.v},   {"k", d.k},              {"b", d.b},                  {"one_design", d.is_1_design()},
           {"supports_distinct", distinct}};
    if (d.r) j["r"] = *d.r;
    if (auto dn = near_extremal_weight(c.field(), c.length()); dn && *dn == w && !words.empty()) {
        const auto lem = lemma_check(c.field(), c.length(), w, BigInt(words.size()));
        std::cout << "A" << w << " mod " << lem.modulus << ": " << (lem.divisible ? "0" : "nonzero") << '\n';
        j["lemma"] = {{"divisible", lem.divisible}, {"problems", lem.problems}};
    }
    write_json(g, j);
    return d.is_1_design() || words.empty() ? kExitPass : kExitFail;
}

// --- neighbor ----------------------------------------------------------

int run_neighbor(const Globals& g, const std::string& base_id, const std::string& x_text) {
    const Catalog cat = load(g);
    const auto& e = entry_or_usage(cat, base_id);
    CodeBuilder b(cat);
    const LinearCode& base = b.build(e.id);
    FieldVector x;
    try {
        x = FieldVector::parse(base.field(), x_text);
    } catch (const std::exception& ex) {
        throw UsageError(std::string("--x: ") + ex.what());
    }
    const LinearCode nb = neighbor(base, x, natural_form(base.field()));
    std::cout << "neighbor of " << e.id << ": [" << nb.length() << "," << nb.dimension() << "], self-dual: yes\n";
    json j{{"base", e.id}, {"x", x.to_string()}, {"n", nb.length()}, {"k", nb.dimension()}};
    if (auto d = near_extremal_weight(nb.field(), nb.length())) {
        const auto m = measure(nb, *d, *d, g.enumeration());
        if (auto a = m.count(*d)) {
            std::cout << "A" << *d << " = " << to_decimal(*a) << '\n';
            j["alpha"] = to_decimal(*a);
        } else {
            std::cout << "A" << *d << ": skipped: budget\n";
        }
        if (auto dm = m.min_weight()) {
            std::cout << "minimum weight " << *dm << '\n';
            j["min_weight"] = *dm;
        }
    }
    write_json(g, j);
    return kExitPass;
}

// --- catalog -----------------------------------------------------------

int run_catalog(const Globals& g, const std::string& action) {
    const Catalog cat = load(g);
    if (action == "serialize") {
        std::cout << serialize_catalog(cat);
        return kExitPass;
    }
    if (action == "list") {
        json out = json::array();
        for (const auto& e : cat.entries) {
            std::cout << std::left << std::setw(14) << e.id << std::setw(15) << family_name(e.family)
                      << field_name(e.field) << ' ' << std::setw(4) << e.length;
            if (e.expect.alpha) std::cout << " alpha=" << to_decimal(*e.expect.alpha);
            if (e.expect.optional) std::cout << " (optional)";
            std::cout << '\n';
            out.push_back({{"id", e.id},
                           {"family", family_name(e.family)},
                           {"field", field_name(e.field)},
                           {"length", e.length}});
        }
        write_json(g, out);
        return kExitPass;
    }
    // check: parse succeeded; apply the modulus tripwire to every alpha
    std::size_t bad = 0;
    for (const auto& e : cat.entries) {
        if (!e.expect.alpha) continue;
        const unsigned mod = near_extremal_modulus(e.field);
        if (*e.expect.alpha % mod != 0) {
            std::cout << e.id << ": alpha " << to_decimal(*e.expect.alpha) << " is not divisible by " << mod << '\n';
            ++bad;
        }
    }
    std::cout << cat.entries.size() << " entries, " << bad << " modulus violations\n";
    write_json(g, {{"entries", cat.entries.size()}, {"modulus_violations", bad}});
    return bad == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-dual codes over GF(3) and GF(4): constructions, enumerators and checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals g;
    app.add_option("--budget", g.budget, "Maximum codewords (or messages) visited per enumeration")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads per enumeration")->check(CLI::Range(1u, 1024u));
    app.add_option("--json", g.json_path, "Write a JSON report to this path ('-' for stdout)");
    app.add_option("--catalog", g.catalog_path, "Catalog file")->capture_default_str();

    std::string id, x_text, field_text = "F3", action;
    std::vector<std::string> ids;
    std::optional<std::size_t> w_max, m, weight;
    bool show_matrix = false, divisibility = false, range = false, extremal = false, all = false;

    auto* construct = app.add_subcommand("construct", "Build a catalog code and test self-duality");
    construct->add_option("id", id, "Catalog id")->required();
    construct->add_flag("--matrix", show_matrix, "Print the reduced generator matrix");

    auto* enumerate = app.add_subcommand("enumerate", "Weight enumerator (full, or low weights only)");
    enumerate->add_option("id", id, "Catalog id")->required();
    enumerate->add_option("--max-weight", w_max, "Only count codewords up to this weight");

    auto* gleason = app.add_subcommand("gleason", "Parametric near-extremal weight enumerators");
    gleason->add_option("--field", field_text, "F3 or F4")->capture_default_str();
    gleason->add_option("--m", m, "Length parameter: n = 12m (F3) or 6m (F4)");
    gleason->add_flag("--check-divisibility", divisibility, "Check s_w = 0 mod 8 / 9 (all m when --m is absent)");
    gleason->add_flag("--alpha-range", range, "Admissible alpha values");
    gleason->add_flag("--extremal", extremal, "Extremal enumerator: sign and divisibility (all m when --m is absent)");

    auto* verify = app.add_subcommand("verify", "Check catalog entries against their expected values");
    verify->add_option("ids", ids, "Ids or inclusive ranges FIRST..LAST");
    verify->add_flag("--all", all, "Every catalog entry");

    auto* design = app.add_subcommand("design", "1-design test on the supports of one weight");
    design->add_option("id", id, "Catalog id")->required();
    design->add_option("--weight", weight, "Weight (default: the near-extremal minimum weight)");

    auto* nb = app.add_subcommand("neighbor", "Neighbor of a catalog code");
    nb->add_option("base", id, "Catalog id of a self-dual code")->required();
    nb->add_option("--x", x_text, "Second half of x, comma separated")->required();

    auto* catalog = app.add_subcommand("catalog", "Catalog maintenance");
    catalog->add_option("action", action, "list, check or serialize")
        ->required()
        ->check(CLI::IsMember({"list", "check", "serialize"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }
    if (g.json_path == "-") json_stdout = std::cout.rdbuf(std::cerr.rdbuf());

    try {
        if (*construct) return run_construct(g, id, show_matrix);
        if (*enumerate) return run_enumerate(g, id, w_max);
        if (*gleason) return run_gleason(g, field_text, m, divisibility, range, extremal);
        if (*verify) return run_verify(g, ids, all);
        if (*design) return run_design(g, id, weight);
        if (*nb) return run_neighbor(g, id, x_text);
        if (*catalog) return run_catalog(g, action);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "skipped: budget: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
