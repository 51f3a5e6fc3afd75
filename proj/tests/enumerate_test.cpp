#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"

using namespace selfdual;

namespace {

const Field kFields[] = {Field::F3, Field::F4};

std::vector<FieldVector> oracle_words(const LinearCode& c, std::size_t w) {
    std::vector<FieldVector> out;
    for (const auto& x : oracle::all_codewords(c))
        if (oracle::weight(x) == w) out.emplace_back(c.field(), x);
    std::sort(out.begin(), out.end());
    return out;
}

void expect_counts(const WeightEnumerator& e, const std::vector<std::uint64_t>& ref) {
    ASSERT_EQ(e.counts.size(), ref.size());
    for (std::size_t w = 0; w < ref.size(); ++w) EXPECT_EQ(e.counts[w], ref[w]) << "weight " << w;
}

TEST(EnumerateTest, FullEnumerationMatchesBruteForce) {
    std::mt19937_64 rng(21);
    // lengths cover one, two and four machine words
    const std::size_t lengths[] = {5, 13, 64, 65, 130, 256};
    for (Field f : kFields)
        for (std::size_t n : lengths)
            for (std::size_t k : {1u, 3u, 5u}) {
                const auto c = oracle::random_code(f, k, n, rng);
                expect_counts(weight_enumerator_full(c), oracle::weight_distribution(c));
            }
}

TEST(EnumerateTest, ThreadsDoNotChangeTheResult) {
    std::mt19937_64 rng(22);
    for (Field f : kFields) {
        const auto c = oracle::random_code(f, f == Field::F3 ? 8 : 6, 20, rng);
        const auto ref = oracle::weight_distribution(c);
        for (unsigned t : {1u, 2u, 3u, 7u}) {
            EnumerationOptions opt;
            opt.threads = t;
            const auto fe = enumerate_codewords(c, opt, 6);
            expect_counts(fe.enumerator, ref);
            EXPECT_EQ(fe.words, oracle_words(c, 6));
        }
    }
}

TEST(EnumerateTest, SelfDualSmallCodes) {
    const auto t = weight_enumerator_full(oracle::tetracode());
    EXPECT_EQ(t.at(0), 1);
    EXPECT_EQ(t.at(3), 8);
    EXPECT_EQ(t.total(), 9);
    EXPECT_EQ(t.min_weight(), 3u);
    const auto h = weight_enumerator_full(oracle::hexacode());
    EXPECT_EQ(h.at(4), 45);
    EXPECT_EQ(h.at(6), 18);
    const auto z = weight_enumerator_full(LinearCode(Field::F3, 6));
    EXPECT_EQ(z.total(), 1);
    EXPECT_FALSE(z.min_weight());
}

TEST(EnumerateTest, BudgetIsEnforced) {
    EnumerationOptions opt;
    opt.budget = 8;
    EXPECT_THROW(weight_enumerator_full(oracle::tetracode(), opt), BudgetExceeded);
    opt.budget = 9;
    EXPECT_NO_THROW(weight_enumerator_full(oracle::tetracode(), opt));
    EXPECT_EQ(codeword_count(Field::F4, 3), 64u);
    EXPECT_EQ(codeword_count(Field::F3, 200), std::numeric_limits<std::uint64_t>::max());
}

TEST(EnumerateTest, LowWeightSearchAgreesWithFullEnumeration) {
    std::mt19937_64 rng(23);
    for (Field f : kFields)
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t k = 3 + trial % 5;
            const std::size_t n = 2 * k + trial % 9;
            const auto c = oracle::random_code(f, k, n, rng);
            const auto ref = oracle::weight_distribution(c);
            const std::size_t w_max = std::min<std::size_t>(n, 1 + trial % 6);
            const auto low = count_low_weight(c, w_max, {}, w_max);
            EXPECT_GT(low.exact_below, w_max);
            for (std::size_t w = 0; w <= w_max; ++w) EXPECT_EQ(low.counts[w], ref[w]) << "weight " << w;
            EXPECT_EQ(low.words, oracle_words(c, w_max));
            std::size_t d = 1;
            while (d <= n && ref[d] == 0) ++d;
            if (d <= w_max) {
                EXPECT_EQ(low.min_weight, d);
            }
        }
}

TEST(EnumerateTest, LowWeightSearchUnderTightBudget) {
    std::mt19937_64 rng(24);
    for (Field f : kFields)
        for (int trial = 0; trial < 20; ++trial) {
            const auto c = oracle::random_code(f, 6, 18, rng);
            const auto ref = oracle::weight_distribution(c);
            EnumerationOptions opt;
            opt.budget = 40 + 20 * static_cast<std::uint64_t>(trial);
            const auto low = count_low_weight(c, 8, opt);
            EXPECT_LE(low.enumerated, opt.budget);
            for (std::size_t w = 0; w <= 8; ++w) {
                if (low.is_exact(w))
                    EXPECT_EQ(low.counts[w], ref[w]) << "weight " << w;
                else
                    EXPECT_LE(low.counts[w], ref[w]) << "weight " << w;
            }
            if (low.min_weight) {
                std::size_t d = 1;
                while (ref[d] == 0) ++d;
                EXPECT_EQ(*low.min_weight, d);
            }
        }
}

TEST(EnumerateTest, ZeroBudgetProvesNothing) {
    EnumerationOptions opt;
    opt.budget = 0;
    const auto low = count_low_weight(oracle::hexacode(), 4, opt);
    EXPECT_EQ(low.exact_below, 0u);
    EXPECT_FALSE(low.min_weight);
    EXPECT_THROW(codewords_of_weight(oracle::hexacode(), 4, opt), BudgetExceeded);
}

TEST(EnumerateTest, CodewordsOfWeightUsesEitherRoute) {
    const auto c = direct_sum(oracle::hexacode(), oracle::hexacode());
    const auto ref = oracle_words(c, 4);
    EXPECT_EQ(ref.size(), 90u);
    EXPECT_EQ(codewords_of_weight(c, 4), ref);
    EnumerationOptions opt;
    opt.budget = 1000;  // below 4^6, enough for the low-weight search
    EXPECT_EQ(codewords_of_weight(c, 4, opt), ref);
}

}  // namespace
