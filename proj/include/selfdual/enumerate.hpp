#pragma once
// Codeword enumeration: exact weight enumerators by a q-ary Gray walk over the
// message space, and a bounded low-weight search over several information sets
// for codes whose full enumeration is out of budget.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "bigint.hpp"
#include "code.hpp"
#include "packed.hpp"

namespace selfdual {

struct EnumerationOptions {
    /// Maximum number of codewords a single enumeration may visit.
    std::uint64_t budget = std::uint64_t{1} << 31;
    unsigned threads = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WeightEnumerator {
    Field field = Field::F3;
    std::size_t n = 0;
    std::vector<BigInt> counts;  // counts[w] for w = 0..n

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }

    /// Smallest nonzero weight present, or nullopt for the zero code.
    std::optional<std::size_t> min_weight() const {
        for (std::size_t w = 1; w < counts.size(); ++w)
            if (counts[w] != 0) return w;
        return std::nullopt;
    }

    BigInt at(std::size_t w) const { return w < counts.size() ? counts[w] : BigInt(0); }

    bool operator==(const WeightEnumerator&) const = default;
};

/// q^k, saturating at the largest uint64.
inline std::uint64_t codeword_count(Field f, std::size_t k) {
    const std::uint64_t q = field_order(f);
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

namespace detail {

template <class Fn>
decltype(auto) dispatch_words(std::size_t n, Fn&& fn) {
    if (n <= 64) return fn(std::integral_constant<std::size_t, 1>{});
    if (n <= 128) return fn(std::integral_constant<std::size_t, 2>{});
    if (n <= 192) return fn(std::integral_constant<std::size_t, 3>{});
    if (n <= 256) return fn(std::integral_constant<std::size_t, 4>{});
    throw std::invalid_argument("codes longer than 256 are not supported by the enumeration kernels");
}

template <Field F, std::size_t W>
inline void add_fixed(PackedWord<W>& x, const PackedWord<W>& y) {
    if constexpr (F == Field::F3)
        add_f3(x, y);
    else
        add_f4(x, y);
}

/// Runs fn(chunk, state) for every chunk in [0, chunks) on up to `threads`
/// workers, each owning one copy of `init`. Returns the per-worker states.
template <class State, class Fn>
std::vector<State> run_chunks(std::size_t chunks, unsigned threads, const State& init, Fn fn) {
    const unsigned workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, chunks)));
    std::vector<State> states(workers, init);
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned t) {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= chunks) break;
            fn(c, states[t]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return states;
}

template <std::size_t W>
std::vector<PackedWord<W>> packed_rows(const Matrix& g) {
    std::vector<PackedWord<W>> rows;
    rows.reserve(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(pack<W>(g.field(), g.row_span(i)));
    return rows;
}

/// Visits every codeword start + sum_j m_j rows[j] exactly once. Over GF(3)
/// the messages follow the modular ternary Gray code, so each step adds one
/// row; over GF(4) they follow the binary reflected Gray code on the
/// GF(2)-basis {row_j, w*row_j}, so each step XORs one basis vector.
template <Field F, std::size_t W, class Visit>
void gray_walk(const std::vector<PackedWord<W>>& rows, PackedWord<W> x, Visit& visit) {
    const std::size_t k = rows.size();
    visit(x);
    if constexpr (F == Field::F3) {
        std::vector<std::uint8_t> digit(k, 0);
        for (;;) {
            std::size_t i = 0;
            while (i < k && digit[i] == 2) digit[i++] = 0;
            if (i == k) break;
            ++digit[i];
            add_f3(x, rows[i]);
            visit(x);
        }
    } else {
        if (2 * k >= 64) throw std::invalid_argument("gray_walk: message space too large");
        std::vector<PackedWord<W>> basis;
        basis.reserve(2 * k);
        for (const auto& r : rows) {
            basis.push_back(r);
            basis.push_back(scale_packed(Field::F4, r, 2));
        }
        const std::uint64_t end = std::uint64_t{1} << (2 * k);
        for (std::uint64_t s = 1; s < end; ++s) {
            add_f4(x, basis[static_cast<std::size_t>(std::countr_zero(s))]);
            visit(x);
        }
    }
}

template <std::size_t W>
struct CountState {
    std::vector<std::uint64_t> counts;
    std::vector<PackedWord<W>> words;
};

template <Field F, std::size_t W>
CountState<W> full_enumeration(const LinearCode& code, unsigned threads, std::size_t collect) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::uint64_t q = field_order(F);
    const auto rows = packed_rows<W>(code.generator());

    // The top `t` message symbols select a chunk; each chunk is an independent walk.
    std::size_t t = 0;
    std::uint64_t chunks = 1;
    if (threads > 1)
        while (t < k && chunks < 8ull * threads) {
            ++t;
            chunks *= q;
        }
    const std::size_t low = k - t;
    const std::vector<PackedWord<W>> low_rows(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(low));

    CountState<W> init;
    init.counts.assign(n + 1, 0);
    auto states = run_chunks(static_cast<std::size_t>(chunks), threads, init, [&](std::size_t c, CountState<W>& st) {
        PackedWord<W> start{};
        std::size_t rest = c;
        for (std::size_t i = 0; i < t; ++i) {
            const auto coeff = static_cast<Symbol>(rest % q);
            rest /= q;
            if (coeff) add_fixed<F>(start, scale_packed(F, rows[low + i], coeff));
        }
        std::uint64_t* counts = st.counts.data();
        auto visit = [&](const PackedWord<W>& x) {
            const unsigned w = packed_weight(x);
            ++counts[w];
            if (w == collect) st.words.push_back(x);
        };
        gray_walk<F>(low_rows, start, visit);
    });

    CountState<W> merged = std::move(states.front());
    for (std::size_t s = 1; s < states.size(); ++s) {
        for (std::size_t w = 0; w <= n; ++w) merged.counts[w] += states[s].counts[w];
        merged.words.insert(merged.words.end(), states[s].words.begin(), states[s].words.end());
    }
    return merged;
}

template <std::size_t W>
std::vector<FieldVector> unpack_all(Field f, const std::vector<PackedWord<W>>& words, std::size_t n) {
    std::vector<FieldVector> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(unpack(f, w, n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

struct FullEnumeration {
    WeightEnumerator enumerator;
    std::vector<FieldVector> words;  // codewords of the requested weight, sorted
};

/// Enumerates all q^k codewords. Optionally collects the codewords of one
/// weight. Throws BudgetExceeded when q^k exceeds the budget.
inline FullEnumeration enumerate_codewords(const LinearCode& code, const EnumerationOptions& opt = {},
                                           std::optional<std::size_t> collect_weight = std::nullopt) {
    const std::uint64_t total = codeword_count(code.field(), code.dimension());
    if (total > opt.budget)
        throw BudgetExceeded("full enumeration needs " + std::to_string(code.dimension()) + " message symbols (" +
                             (total == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                                 : std::to_string(total)) +
                             " codewords), budget is " + std::to_string(opt.budget));
    const std::size_t n = code.length();
    const std::size_t collect = collect_weight.value_or(std::numeric_limits<std::size_t>::max());
    return detail::dispatch_words(std::max<std::size_t>(n, 1), [&](auto wc) {
        constexpr std::size_t W = decltype(wc)::value;
        auto st = code.field() == Field::F3 ? detail::full_enumeration<Field::F3, W>(code, opt.threads, collect)
                                            : detail::full_enumeration<Field::F4, W>(code, opt.threads, collect);
        FullEnumeration out;
        out.enumerator.field = code.field();
        out.enumerator.n = n;
        out.enumerator.counts.reserve(n + 1);
        for (std::uint64_t c : st.counts) out.enumerator.counts.emplace_back(c);
        out.words = detail::unpack_all(code.field(), st.words, n);
        return out;
    });
}

inline WeightEnumerator weight_enumerator_full(const LinearCode& code, const EnumerationOptions& opt = {}) {
    return enumerate_codewords(code, opt).enumerator;
}

/// Result of a bounded low-weight search.
///
/// Every codeword of weight < exact_below was visited, so counts[w] is exact
/// for those weights. Counts at weights in [exact_below, w_max] only include
/// the codewords that happened to be visited and are lower bounds.
struct LowWeightResult {
    Field field = Field::F3;
    std::size_t n = 0;
    std::size_t w_max = 0;
    std::vector<BigInt> counts;  // index 0..w_max
    std::size_t exact_below = 0;
    /// Exact minimum weight, when certified by the search.
    std::optional<std::size_t> min_weight;
    /// min_weight when certified, otherwise the proven lower bound exact_below.
    std::size_t d_certified = 0;
    int depth = -1;  // largest message weight enumerated per information set
    std::size_t information_sets = 0;
    std::uint64_t enumerated = 0;
    std::vector<FieldVector> words;  // codewords of the requested weight, sorted

    bool is_exact(std::size_t w) const { return w < exact_below; }
};

namespace detail {

struct InformationSet {
    Matrix generator;                 // systematic on `pivots`
    std::vector<std::size_t> pivots;  // message coordinates, in row order
    std::size_t fresh = 0;            // pivots not shared with earlier sets
};

/// Greedy sequence of information sets whose fresh parts are pairwise
/// disjoint: each set prefers columns not used by an earlier set.
inline std::vector<InformationSet> information_sets(const LinearCode& code) {
    const std::size_t n = code.length();
    std::vector<bool> used(n, false);
    std::vector<InformationSet> sets;
    if (code.dimension() == 0) return sets;
    for (;;) {
        std::vector<std::size_t> order;
        for (std::size_t c = 0; c < n; ++c)
            if (!used[c]) order.push_back(c);
        const std::size_t unused = order.size();
        for (std::size_t c = 0; c < n; ++c)
            if (used[c]) order.push_back(c);
        if (unused == 0) break;
        RowEchelon e = row_reduce(code.generator(), order);
        std::size_t fresh = 0;
        for (std::size_t p : e.pivots)
            if (!used[p]) ++fresh;
        if (fresh == 0) break;
        for (std::size_t p : e.pivots) used[p] = true;
        sets.push_back({std::move(e.matrix), std::move(e.pivots), fresh});
    }
    return sets;
}

/// Number of messages of weight <= p in k symbols over a field of order q.
inline std::uint64_t messages_up_to(std::size_t k, int p, std::uint64_t q) {
    if (p < 0) return 0;
    long double total = 0, term = 1;  // term = C(k,i) (q-1)^i
    for (int i = 0; i <= p && static_cast<std::size_t>(i) <= k; ++i) {
        total += term;
        term = term * static_cast<long double>(k - static_cast<std::size_t>(i)) / (i + 1) * (q - 1);
    }
    if (total >= 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(total + 0.5L);
}

inline std::size_t contribution(const InformationSet& s, std::size_t k, int p) {
    const long long c = static_cast<long long>(p) + 1 - static_cast<long long>(k - s.fresh);
    return c > 0 ? static_cast<std::size_t>(c) : 0;
}

template <std::size_t W>
struct LowState {
    std::vector<std::uint64_t> counts;
    std::vector<PackedWord<W>> words;
    std::size_t min_found = std::numeric_limits<std::size_t>::max();
    std::uint64_t visited = 0;
};

template <Field F, std::size_t W>
LowState<W> low_weight_search(const LinearCode& code, const std::vector<InformationSet>& sets, int p,
                              std::size_t w_max, std::size_t collect, unsigned threads) {
    const std::size_t k = code.dimension();
    const std::size_t q1 = field_order(F) - 1;
    std::vector<std::array<std::uint64_t, W>> masks;
    std::vector<std::vector<PackedWord<W>>> scaled;  // per set: k*q1 scaled rows
    for (const auto& s : sets) {
        std::array<std::uint64_t, W> m{};
        for (std::size_t c : s.pivots) m[c / 64] |= std::uint64_t{1} << (c % 64);
        masks.push_back(m);
        auto rows = packed_rows<W>(s.generator);
        std::vector<PackedWord<W>> sc;
        for (const auto& r : rows)
            for (Symbol c = 1; c <= q1; ++c) sc.push_back(scale_packed(F, r, c));
        scaled.push_back(std::move(sc));
    }

    LowState<W> init;
    init.counts.assign(w_max + 1, 0);
    // chunk = (set, first message position); position k stands for the zero message
    const std::size_t per_set = k + 1;
    auto states = run_chunks(sets.size() * per_set, threads, init, [&](std::size_t chunk, LowState<W>& st) {
        const std::size_t j = chunk / per_set;
        const std::size_t first = chunk % per_set;
        const auto& sc = scaled[j];
        auto visit = [&](const PackedWord<W>& x) {
            ++st.visited;
            for (std::size_t i = 0; i < j; ++i)
                if (packed_weight_masked(x, masks[i]) <= static_cast<unsigned>(p)) return;  // seen by set i
            const std::size_t w = packed_weight(x);
            if (w > 0 && w < st.min_found) st.min_found = w;
            if (w <= w_max) ++st.counts[w];
            if (w == collect) st.words.push_back(x);
        };
        if (first == k) {
            visit(PackedWord<W>{});
            return;
        }
        if (p < 1) return;
        // depth-first over increasing positions; every node is one message
        auto dfs = [&](auto&& self, std::size_t from, int left, const PackedWord<W>& acc) -> void {
            for (std::size_t pos = from; pos < k; ++pos)
                for (std::size_t c = 0; c < q1; ++c) {
                    PackedWord<W> nx = acc;
                    add_fixed<F>(nx, sc[pos * q1 + c]);
                    visit(nx);
                    if (left > 1) self(self, pos + 1, left - 1, nx);
                }
        };
        for (std::size_t c = 0; c < q1; ++c) {
            PackedWord<W> nx = sc[first * q1 + c];
            visit(nx);
            if (p > 1) dfs(dfs, first + 1, p - 1, nx);
        }
    });

    LowState<W> merged = std::move(states.front());
    for (std::size_t s = 1; s < states.size(); ++s) {
        for (std::size_t w = 0; w <= w_max; ++w) merged.counts[w] += states[s].counts[w];
        merged.words.insert(merged.words.end(), states[s].words.begin(), states[s].words.end());
        merged.min_found = std::min(merged.min_found, states[s].min_found);
        merged.visited += states[s].visited;
    }
    return merged;
}

}  // namespace detail

/// Counts codewords of weight <= w_max by enumerating, for each of a sequence
/// of information sets, all messages of weight <= p. A codeword none of whose
/// information sets carries <= p nonzero message symbols has weight at least
/// the sum of the per-set contributions, which gives the exactness bound.
/// The depth p is the smallest one whose bound exceeds w_max, limited by the
/// budget on visited messages.
inline LowWeightResult count_low_weight(const LinearCode& code, std::size_t w_max, const EnumerationOptions& opt = {},
                                        std::optional<std::size_t> collect_weight = std::nullopt) {
    const std::size_t n = code.length();
    if (w_max > n) throw std::invalid_argument("count_low_weight: w_max exceeds the code length");
    const std::size_t k = code.dimension();
    const std::uint64_t q = field_order(code.field());

    LowWeightResult out;
    out.field = code.field();
    out.n = n;
    out.w_max = w_max;
    out.counts.assign(w_max + 1, 0);

    if (k == 0) {
        out.counts[0] = 1;
        out.exact_below = n + 1;
        out.d_certified = n + 1;
        return out;
    }

    auto all_sets = detail::information_sets(code);
    auto bound = [&](int p) {
        std::size_t b = 0;
        for (const auto& s : all_sets) b += detail::contribution(s, k, p);
        return b;
    };
    auto cost = [&](int p) {
        std::uint64_t c = 0;
        const std::uint64_t per = detail::messages_up_to(k, p, q);
        for (const auto& s : all_sets)
            if (detail::contribution(s, k, p) > 0) {
                if (c > std::numeric_limits<std::uint64_t>::max() - per) return std::numeric_limits<std::uint64_t>::max();
                c += per;
            }
        return c;
    };

    int depth = -1;
    for (int p = 0; p <= static_cast<int>(k); ++p) {
        if (cost(p) > opt.budget) break;
        depth = p;
        if (bound(p) > w_max) break;
    }
    out.depth = depth;
    if (depth < 0) {
        out.exact_below = 0;
        out.d_certified = 0;
        return out;
    }

    std::vector<detail::InformationSet> sets;
    for (auto& s : all_sets)
        if (detail::contribution(s, k, depth) > 0) sets.push_back(std::move(s));
    out.information_sets = sets.size();
    std::size_t exact = 0;
    for (const auto& s : sets) exact += detail::contribution(s, k, depth);
    out.exact_below = std::min(exact, n + 1);

    const std::size_t collect = collect_weight.value_or(std::numeric_limits<std::size_t>::max());
    detail::dispatch_words(n, [&](auto wc) {
        constexpr std::size_t W = decltype(wc)::value;
        auto st = code.field() == Field::F3
                      ? detail::low_weight_search<Field::F3, W>(code, sets, depth, w_max, collect, opt.threads)
                      : detail::low_weight_search<Field::F4, W>(code, sets, depth, w_max, collect, opt.threads);
        for (std::size_t w = 0; w <= w_max; ++w) out.counts[w] = st.counts[w];
        out.enumerated = st.visited;
        if (st.min_found <= out.exact_below) out.min_weight = st.min_found;
        out.words = detail::unpack_all(code.field(), st.words, n);
    });
    if (out.exact_below > n && !out.min_weight) out.d_certified = n + 1;  // zero code handled above; defensive cap
    out.d_certified = out.min_weight.value_or(out.exact_below);
    return out;
}

/// All codewords of weight w, by full enumeration when within budget and by
/// the low-weight search otherwise. Throws BudgetExceeded when neither route
/// can produce the complete list.
inline std::vector<FieldVector> codewords_of_weight(const LinearCode& code, std::size_t w,
                                                    const EnumerationOptions& opt = {}) {
    if (codeword_count(code.field(), code.dimension()) <= opt.budget) return enumerate_codewords(code, opt, w).words;
    auto low = count_low_weight(code, w, opt, w);
    if (!low.is_exact(w))
        throw BudgetExceeded("weight-" + std::to_string(w) + " codewords cannot be listed exhaustively within budget");
    return std::move(low.words);
}

}  // namespace selfdual
