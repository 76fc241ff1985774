#include <gtest/gtest.h>

#include <map>

#include "pcpeq/density.hpp"
#include "test_support.hpp"

using namespace pcpeq;
using namespace pcpeq::density;
using namespace pcpeq::testing;

namespace {

std::vector<std::vector<int>> small_subsets(int letters) {
    std::vector<std::vector<int>> out{{}};
    for (int a = 0; a < letters; ++a) {
        out.push_back({a});
        for (int b = a + 1; b < letters; ++b) {
            out.push_back({a, b});
        }
    }
    return out;
}

double as_double(const Rational& r) { return static_cast<double>(r); }

} // namespace

TEST(MarkedLimit, Values) {
    EXPECT_EQ(marked_density_limit(2, 2), Rational(1, 2));
    EXPECT_EQ(marked_density_limit(1, 1), Rational(1));
    EXPECT_EQ(marked_density_limit(2, 3), Rational(2, 3));
    EXPECT_EQ(marked_density_limit(3, 2), Rational(0));
}

TEST(ReducedWordCount, Examples) {
    const Letter x{0, 1};
    const Letter y{1, 1};
    EXPECT_EQ(reduced_word_count(2, 1, {x}, {y}), Count(2));
    EXPECT_EQ(reduced_word_count(2, 2, {}, {}), Count(12));
    for (std::size_t m = 1; m <= 5; ++m) {
        EXPECT_EQ(reduced_word_count(m, 1, {}, {}), Count(2 * m));
    }
    EXPECT_THROW(reduced_word_count(2, 0, {}, {}), std::invalid_argument);
}

TEST(ReducedWordCount, MatchesEnumeration) {
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto subsets = small_subsets(static_cast<int>(2 * m));
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto counts = reduced_word_tally(m, n);
            for (const auto& a : subsets) {
                for (const auto& b : subsets) {
                    const long long expected = count_avoiding(counts, a, b);
                    ASSERT_EQ(reduced_word_count(m, n, letters_from_ranks(a), letters_from_ranks(b)), Count(expected))
                        << "m=" << m << " n=" << n;
                }
            }
        }
    }
}

TEST(ReducedWordCount, SingletonExclusionsSum) {
    // Each word avoids all but one starting letter, so summing the
    // single-letter exclusions counts every word 2m-1 times.
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 6; ++n) {
            Count sum = 0;
            for (std::uint32_t i = 0; i < m; ++i) {
                sum += reduced_word_count(m, n, {{i, 1}}, {});
                sum += reduced_word_count(m, n, {{i, -1}}, {});
            }
            const Count total = reduced_word_count(m, n, {}, {});
            EXPECT_EQ(sum, Count(2 * m - 1) * total);
            EXPECT_EQ(total, Count(2 * m) * boost::multiprecision::pow(Count(2 * m - 1),
                                                                       static_cast<unsigned>(n - 1)));
        }
    }
}

TEST(MeasureDensity, ExactMonoidK2M2N10) {
    const Measurement r = measure_density({2, 2, 10, 0}, Kind::marked_monoid);
    // Words of length <= 10 over two letters: 2047, of which 1023 start with each letter.
    EXPECT_EQ(r.empirical, Rational(2 * 1023 * 1023, Count(2047) * 2047));
    EXPECT_EQ(r.predicted, Rational(1, 2));
    EXPECT_NEAR(as_double(r.empirical), 0.5, 0.05);
}

TEST(MeasureDensity, ExactMonoidK1M1) {
    EXPECT_EQ(measure_density({1, 1, 5, 0}, Kind::marked_monoid).empirical, Rational(5, 6));
}

TEST(MeasureDensity, ImmersionK1M1LimitPositive) {
    const Measurement r = measure_density({1, 1, 5, 0}, Kind::immersion_group);
    EXPECT_GT(r.predicted, 0);
    // Over one generator the nonempty reduced words are x^i and x^-i, all immersions.
    EXPECT_EQ(r.empirical, Rational(10, 11));
}

TEST(MeasureDensity, ImmersionExactAgainstBruteForce) {
    // k = 2, m = 2, n = 3: enumerate all 53^2 image pairs directly.
    const std::size_t m = 2;
    std::vector<std::vector<int>> words{{}};
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<int> word(n, 0);
        while (true) {
            bool ok = true;
            for (std::size_t i = 1; i < n; ++i) {
                ok = ok && word[i] != (word[i - 1] ^ 1);
            }
            if (ok) {
                words.push_back(word);
            }
            std::size_t i = 0;
            while (i < n && ++word[i] == static_cast<int>(2 * m)) {
                word[i++] = 0;
            }
            if (i == n) {
                break;
            }
        }
    }
    ASSERT_EQ(words.size(), 53u);
    long long hits = 0;
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (u.empty() || v.empty()) {
                continue;
            }
            std::set<int> firsts{u.front(), u.back() ^ 1, v.front(), v.back() ^ 1};
            hits += firsts.size() == 4 ? 1 : 0;
        }
    }
    EXPECT_EQ(measure_density({2, 2, 3, 0}, Kind::immersion_group).empirical,
              Rational(hits, 53 * 53));
}

TEST(ImmersionLimit, ClosedFormForLargerAlphabets) {
    // Each image's first letter and inverted last letter are asymptotically
    // uniform and independent: (2m)! / ((2m-2k)! (2m)^{2k}).
    EXPECT_EQ(immersion_density_limit(1, 2), Rational(3, 4));
    EXPECT_EQ(immersion_density_limit(2, 2), Rational(3, 32));
    EXPECT_EQ(immersion_density_limit(1, 3), Rational(5, 6));
    EXPECT_EQ(immersion_density_limit(1, 1), Rational(1));
    EXPECT_EQ(immersion_density_limit(3, 2), Rational(0));
}

TEST(ImmersionLimit, ExactApproachesLimit) {
    const double limit = as_double(immersion_density_limit(1, 2));
    double previous = 1.0;
    for (std::size_t n : {2, 4, 6, 8}) {
        const double gap =
            std::abs(as_double(measure_density({1, 2, n, 0}, Kind::immersion_group).empirical) - limit);
        EXPECT_LT(gap, previous);
        previous = gap;
    }
    EXPECT_LT(previous, 0.01);
}

TEST(MeasureDensity, MarkedTrendTowardsLimit) {
    double previous = 1.0;
    for (std::size_t n : {2, 4, 6, 8, 10}) {
        const double gap =
            std::abs(as_double(measure_density({2, 2, n, 0}, Kind::marked_monoid).empirical) - 0.5);
        EXPECT_LT(gap, previous);
        previous = gap;
    }
}

TEST(MeasureDensity, MonteCarloIsSeededAndClose) {
    const Params p{2, 2, 6, 20000, 7};
    const Measurement a = measure_density(p, Kind::marked_monoid);
    const Measurement b = measure_density(p, Kind::marked_monoid);
    EXPECT_EQ(a.empirical, b.empirical);
    const Measurement exact = measure_density({2, 2, 6, 0}, Kind::marked_monoid);
    EXPECT_NEAR(as_double(a.empirical), as_double(exact.empirical), 0.02);

    const Measurement g = measure_density({2, 3, 5, 20000, 7}, Kind::immersion_group);
    const Measurement gexact = measure_density({2, 3, 5, 0}, Kind::immersion_group);
    EXPECT_NEAR(as_double(g.empirical), as_double(gexact.empirical), 0.02);
}

TEST(MeasureDensity, RejectsBadParams) {
    EXPECT_THROW(measure_density({3, 2, 4, 0}, Kind::marked_monoid), std::invalid_argument);
    EXPECT_THROW(measure_density({1, 1, 0, 0}, Kind::marked_monoid), std::invalid_argument);
    EXPECT_THROW(measure_density({1, 0, 3, 0}, Kind::marked_monoid), std::invalid_argument);
}

TEST(Csv, Row) {
    const Params p{2, 2, 10, 0};
    EXPECT_EQ(csv_header(), "kind,k,m,n,samples,empirical,predicted");
    EXPECT_EQ(csv_row(p, Kind::marked_monoid, measure_density(p, Kind::marked_monoid)),
              "marked-monoid,2,2,10,0,0.499512,0.500000");
    EXPECT_EQ(kind_from_string("immersion-group"), Kind::immersion_group);
    EXPECT_FALSE(kind_from_string("bogus"));
}
