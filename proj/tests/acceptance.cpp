// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <selfdual/selfdual.hpp>

using namespace selfdual;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            problems.push_back(what);
        }
    }
};

EnumerationOptions enumeration_options() {
    EnumerationOptions opt;
    opt.threads = std::max(1u, std::thread::hardware_concurrency());
    return opt;
}

// One full enumeration per catalog code, with the minimum-weight words kept.
struct Measured {
    WeightEnumerator enumerator;
    std::vector<FieldVector> words;  // codewords of the near-extremal weight
    std::size_t collected = 0;
    bool self_dual = false;
};

class Workspace {
public:
    Workspace() : cat_(load_catalog(SELFDUAL_CATALOG)), builder_(cat_) {}

    const Catalog& catalog() const { return cat_; }
    CodeBuilder& builder() { return builder_; }

    const Measured& full(const std::string& id) {
        if (auto it = full_.find(id); it != full_.end()) return it->second;
        const LinearCode& c = builder_.build(id);
        Measured m;
        m.self_dual = is_self_dual(c);
        m.collected = near_extremal_weight(c.field(), c.length()).value_or(0);
        auto fe = enumerate_codewords(c, enumeration_options(), m.collected);
        m.enumerator = std::move(fe.enumerator);
        m.words = std::move(fe.words);
        return full_.emplace(id, std::move(m)).first->second;
    }

    const std::map<std::string, Measured>& all_full() const { return full_; }

private:
    Catalog cat_;
    CodeBuilder builder_;
    std::map<std::string, Measured> full_;
};

std::string str(const BigInt& v) { return to_decimal(v); }

// --- criteria ---

Outcome ac1_tables() {
    Outcome o;
    std::ifstream in(std::string(SELFDUAL_TEST_DATA) + "/parametric_tables.txt");
    o.require(static_cast<bool>(in), "cannot open parametric_tables.txt");
    std::map<std::pair<std::string, std::size_t>, std::map<std::size_t, AffineCount>> tables;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string f, s, t;
        std::size_t n = 0, w = 0;
        ls >> f >> n >> w >> s >> t;
        tables[{f, n}][w] = AffineCount{BigInt(s), BigInt(t)};
    }
    std::size_t coefficients = 0;
    for (const auto& [key, rows] : tables) {
        const Field f = parse_field(key.first);
        const auto pe = parametric_near_extremal(f, key.second / length_per_m(f));
        o.require(pe.terms == rows, key.first + " n=" + std::to_string(key.second) + " differs");
        coefficients += rows.size();
    }
    o.require(tables.size() == 20, "expected 20 enumerators, read " + std::to_string(tables.size()));
    o.detail = std::to_string(tables.size()) + " enumerators, " + std::to_string(coefficients) + " weights exact";
    return o;
}

Outcome ac2_divisibility() {
    Outcome o;
    std::size_t checked = 0;
    for (Field f : {Field::F3, Field::F4})
        for (std::size_t m = 1; m <= near_extremal_max_m(f); ++m) {
            const auto d = divisibility_check(f, m);
            checked += d.checked;
            o.require(d.passed(), std::string(field_name(f)) + " m=" + std::to_string(m));
        }
    o.detail = "F3 m=1..146 mod 8, F4 m=1..37 mod 9, " + std::to_string(checked) + " coefficients";
    return o;
}

Outcome ac3_alpha_ranges() {
    Outcome o;
    struct Case {
        Field f;
        std::size_t m;
        int lo, hi;
    };
    const Case cases[] = {{Field::F3, 3, 1, 111},      {Field::F3, 4, 1, 4324}, {Field::F3, 5, 1, 5148},
                          {Field::F3, 6, 14466, 251482}, {Field::F4, 4, 1, 253},  {Field::F4, 5, 1, 1319},
                          {Field::F4, 6, 1, 7140}};
    for (const auto& c : cases) {
        const auto r = alpha_range(c.f, c.m);
        o.require(r.beta_min == c.lo && r.beta_max == c.hi,
                  std::string(field_name(c.f)) + " m=" + std::to_string(c.m) + ": [" + str(r.beta_min) + "," +
                      str(r.beta_max) + "]");
    }
    o.detail = "7 beta ranges exact";
    return o;
}

Outcome ac4_small_codes() {
    Outcome o;
    const LinearCode tetra(Field::F3,
                           {FieldVector::parse(Field::F3, "1,0,1,1"), FieldVector::parse(Field::F3, "0,1,1,2")}, 4);
    const LinearCode t3 = direct_sum(direct_sum(tetra, tetra), tetra);
    const LinearCode pair(Field::F4, {FieldVector::parse(Field::F4, "1,1")}, 2);
    const LinearCode cube = direct_sum(direct_sum(pair, pair), pair);
    o.require(is_self_dual(t3) && is_self_dual(cube), "not self-dual");

    // polynomial products: W_tetracode = 1 + 8y^3, W_pair = 1 + 3y^2
    const BigPoly w3 = BigPoly{{0, 1}, {3, 8}}.pow(3);
    const BigPoly w4 = BigPoly{{0, 1}, {2, 3}}.pow(3);
    auto as_poly = [](const WeightEnumerator& e) {
        BigPoly p;
        for (std::size_t w = 0; w < e.counts.size(); ++w) p.add_term(w, e.counts[w]);
        return p;
    };
    const auto e3 = weight_enumerator_full(t3);
    const auto e4 = weight_enumerator_full(cube);
    o.require(as_poly(e3) == w3, "tetracode^3 enumeration vs product");
    o.require(as_poly(e4) == w4, "cube enumeration vs product");
    o.require(as_poly(parametric_near_extremal(Field::F3, 1).evaluate(24)) == w3, "W_3,12 at alpha=24");
    o.require(as_poly(parametric_near_extremal(Field::F4, 1).evaluate(9)) == w4, "W_4,6 at alpha=9");
    o.detail = "W_3,12(24) = (1+8y^3)^3, W_4,6(9) = (1+3y^2)^3";
    return o;
}

Outcome ac5_length24(Workspace& ws) {
    Outcome o;
    const auto& c = ws.full("C24.4");
    o.require(c.self_dual, "C24.4 not Hermitian self-dual");
    o.require(c.enumerator.min_weight() == 8u, "C24.4 minimum weight");
    const std::pair<const char*, int> rows[] = {{"N24.1", 864}, {"N24.2", 1026}};
    for (const auto& [id, alpha] : rows) {
        const auto& m = ws.full(id);
        o.require(m.self_dual, std::string(id) + " not self-dual");
        o.require(m.enumerator.min_weight() == 8u, std::string(id) + " minimum weight");
        o.require(m.enumerator.at(8) == alpha, std::string(id) + " A8=" + str(m.enumerator.at(8)));
        o.require(ws.catalog().at(id).expect.alpha == alpha, std::string(id) + " catalog alpha");
    }
    o.detail = "C24.4 [24,12,8] with A8=" + str(c.enumerator.at(8)) + "; N24.1 A8=" +
               str(ws.full("N24.1").enumerator.at(8)) + ", N24.2 A8=" + str(ws.full("N24.2").enumerator.at(8));
    return o;
}

Outcome ac6_length30(Workspace& ws) {
    Outcome o;
    const auto& c = ws.full("C30");
    o.require(c.self_dual && c.enumerator.min_weight() == 12u, "C30 is not [30,15,12]");
    const auto& d = ws.full("D30.1");
    o.require(d.self_dual && d.enumerator.min_weight() == 10u && d.enumerator.at(10) == 3249,
              "D30.1 A10=" + str(d.enumerator.at(10)));
    std::size_t rows = 0;
    for (const auto& e : ws.catalog().entries) {
        if (e.id.rfind("N30.", 0) != 0) continue;
        const auto& m = ws.full(e.id);
        o.require(m.self_dual, e.id + " not self-dual");
        o.require(m.enumerator.min_weight() == 10u && m.enumerator.at(10) == *e.expect.alpha,
                  e.id + " A10=" + str(m.enumerator.at(10)) + " expected " + str(*e.expect.alpha));
        ++rows;
    }
    o.require(rows >= 5, "fewer than 5 neighbor rows");
    const std::pair<const char*, int> sample[] = {{"N30.1", 1917}, {"N30.19", 3168}, {"N30.20", 3213}};
    for (const auto& [id, alpha] : sample) o.require(ws.full(id).enumerator.at(10) == alpha, id);
    o.detail = "C30 extremal, D30.1 A10=3249, " + std::to_string(rows) + " neighbor rows exact";
    return o;
}

Outcome ac7_length36(Workspace& ws) {
    Outcome o;
    std::size_t four = 0, bordered = 0, neighbors = 0;
    for (const auto& e : ws.catalog().entries) {
        if (e.field != Field::F3 || e.length != 36 || !e.expect.alpha) continue;
        if (e.family == Family::Reference) continue;
        const auto& m = ws.full(e.id);
        o.require(m.self_dual, e.id + " not self-dual");
        o.require(m.enumerator.min_weight() == 9u && m.enumerator.at(9) == *e.expect.alpha,
                  e.id + " A9=" + str(m.enumerator.at(9)) + " expected " + str(*e.expect.alpha));
        if (e.family == Family::FourNegacirc) ++four;
        if (e.family == Family::BorderedDcc) ++bordered;
        if (e.family == Family::Neighbor) ++neighbors;
    }
    o.require(four == 19 && bordered == 3 && neighbors >= 10, "row counts");
    std::vector<int> balpha;
    for (const char* id : {"C36.20", "C36.21", "C36.22"}) balpha.push_back(static_cast<int>(ws.full(id).enumerator.at(9)));
    o.require(balpha == std::vector<int>{136, 408, 544}, "bordered alphas");
    const auto& p = ws.full("P36");
    o.require(p.self_dual && p.enumerator.at(9) == 0 && p.enumerator.at(12) == 42840 &&
                  p.enumerator.min_weight() == 12u,
              "P36 A9=" + str(p.enumerator.at(9)) + " A12=" + str(p.enumerator.at(12)));
    o.detail = std::to_string(four) + " four-negacirculant, " + std::to_string(bordered) + " bordered, " +
               std::to_string(neighbors) + " neighbor rows exact; P36 A12=42840";
    return o;
}

Outcome ac8_designs(Workspace& ws) {
    Outcome o;
    std::size_t designs = 0;
    auto check = [&](const std::string& id, Field f, std::size_t n, std::size_t d, const BigInt& count,
                     const std::vector<FieldVector>& words) {
        const auto lem = lemma_check(f, n, d, count);
        o.require(lem.passed(), id + " lemma");
        const auto reps = scalar_classes(words);
        const unsigned cls = f == Field::F3 ? 2 : 3;
        o.require(BigInt(words.size()) == count, id + " collected words");
        o.require(BigInt(reps.size()) * cls == count, id + " scalar classes");
        o.require(supports_distinct(reps), id + " repeated supports");
        const auto des = design_from_words(n, d, words);
        o.require(des.is_1_design(), id + " not a 1-design");
        o.require(lem.r && des.r && *lem.r == BigInt(*des.r), id + " replication number");
        ++designs;
    };
    // exhaustively enumerated codes
    for (const auto& [id, m] : ws.all_full()) {
        const auto& e = ws.catalog().at(id);
        const auto dmin = m.enumerator.min_weight();
        if (!dmin || *dmin != m.collected) continue;  // extremal codes have no weight-2m/3m words
        check(id, e.field, e.length, *dmin, m.enumerator.at(*dmin), m.words);
    }
    // length 48: the low-weight search is exhaustive below weight 12
    std::size_t low = 0;
    for (const auto& e : ws.catalog().entries) {
        if (e.length != 48 || e.family == Family::Reference) continue;
        const LinearCode& c = ws.builder().build(e.id);
        const auto r = count_low_weight(c, 12, enumeration_options(), 12);
        if (!r.is_exact(12) || r.min_weight != 12u) continue;
        check(e.id, e.field, e.length, 12, r.counts[12], r.words);
        ++low;
    }
    o.detail = std::to_string(designs) + " near-extremal codes (" + std::to_string(low) +
               " of length 48 by low-weight search): lemma, classes, 1-design";
    return o;
}

Outcome ac9_structural(Workspace& ws) {
    Outcome o;
    std::size_t built = 0, tripwire = 0;
    for (const auto& e : ws.catalog().entries) {
        if (e.length != 48 && e.length != 60 && e.length != 72) continue;
        if (e.family != Family::Reference) {
            o.require(is_self_dual(ws.builder().build(e.id)), e.id + " not self-dual");
            ++built;
        }
        if (e.expect.alpha) {
            o.require(*e.expect.alpha % near_extremal_modulus(e.field) == 0, e.id + " alpha fails the modulus");
            ++tripwire;
        }
    }
    o.require(built >= 186, "expected at least 186 constructible entries");
    o.detail = std::to_string(built) + " codes self-dual, " + std::to_string(tripwire) + " alphas pass mod 8";
    return o;
}

Outcome ac10_extremal() {
    Outcome o;
    std::size_t nonneg = 0, total = 0;
    for (Field f : {Field::F3, Field::F4})
        for (std::size_t m = 1; m <= near_extremal_max_m(f); ++m) {
            const auto ex = extremal_enumerator(f, m);
            ++total;
            if (!ex.nonnegative()) continue;
            ++nonneg;
            o.require(ex.divisibility_violations.empty(), std::string(field_name(f)) + " m=" + std::to_string(m));
        }
    o.detail = std::to_string(nonneg) + " of " + std::to_string(total) + " extremal enumerators nonnegative, all divisible";
    return o;
}

}  // namespace

int main() {
    Workspace ws;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 parametric enumerators", ac1_tables},
        {"AC2 divisibility", ac2_divisibility},
        {"AC3 alpha ranges", ac3_alpha_ranges},
        {"AC4 small-code oracles", ac4_small_codes},
        {"AC5 quaternary length 24", [&] { return ac5_length24(ws); }},
        {"AC6 quaternary length 30", [&] { return ac6_length30(ws); }},
        {"AC7 ternary length 36", [&] { return ac7_length36(ws); }},
        {"AC8 designs and lemma", [&] { return ac8_designs(ws); }},
        {"AC9 structure at lengths 48/60/72", [&] { return ac9_structural(ws); }},
        {"AC10 extremal corollaries", ac10_extremal},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::printf("%s %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
