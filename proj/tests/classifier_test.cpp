#include "support.hpp"

#include <bergekit/classifier.hpp>
#include <bergekit/error.hpp>
#include <bergekit/graph.hpp>
#include <bergekit/matrix_io.hpp>
#include <bergekit/named.hpp>
#include <bergekit/report_json.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace bergekit;
using namespace bergekit::testing;

namespace {

Rational exponent_of(const BitMatrix& f) { return classify_bh(f).exponent(); }

bool cites(const AsymptoticClass& c, const std::string& anchor) {
    return std::any_of(c.rules.begin(), c.rules.end(), [&](const Rule& r) { return r.anchor == anchor; });
}

bool has_note(const AsymptoticClass& c, const std::string& prefix) {
    return std::any_of(c.notes.begin(), c.notes.end(), [&](const std::string& n) { return n.rfind(prefix, 0) == 0; });
}

BitMatrix forest(const std::string& literal) { return incidence_matrix(parse_graph(literal)); }

// Number of isomorphism classes of simple k-rowed matrices with exactly c columns,
// by counting column sets fixed by each row permutation.
long long burnside_count(int k, int c) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    const int universe = 1 << k;
    long long fixed_total = 0;
    long long group = 0;
    do {
        ++group;
        std::vector<int> image(static_cast<std::size_t>(universe));
        for (int s = 0; s < universe; ++s) {
            int t = 0;
            for (int r = 0; r < k; ++r) {
                if ((s >> r) & 1) {
                    t |= 1 << perm[static_cast<std::size_t>(r)];
                }
            }
            image[static_cast<std::size_t>(s)] = t;
        }
        std::vector<bool> seen(static_cast<std::size_t>(universe));
        std::vector<long long> ways(static_cast<std::size_t>(c + 1));
        ways[0] = 1;
        for (int s = 0; s < universe; ++s) {
            if (seen[static_cast<std::size_t>(s)]) {
                continue;
            }
            int len = 0;
            for (int x = s; !seen[static_cast<std::size_t>(x)]; x = image[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = true;
                ++len;
            }
            for (int total = c; total >= len; --total) {
                ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - len)];
            }
        }
        fixed_total += ways[static_cast<std::size_t>(c)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return fixed_total / group;
}

}  // namespace

TEST(Classify, Examples) {
    EXPECT_EQ(exponent_of(identity(3)), (Rational{0, 1}));
    EXPECT_EQ(exponent_of(g2()), (Rational{2, 1}));
    EXPECT_EQ(exponent_of(c4()), (Rational{3, 2}));
    EXPECT_EQ(exponent_of(repeat(ones_column(3), 2)), (Rational{3, 1}));
    EXPECT_EQ(exponent_of(h_matrix(2)), (Rational{1, 1}));
    EXPECT_EQ(exponent_of(g1()), (Rational{1, 1}));
    EXPECT_EQ(exponent_of(h_matrix(8)), (Rational{1, 1}));
    EXPECT_EQ(exponent_of(repeat(ones_column(4), 2)), (Rational{4, 1}));

    const AsymptoticClass c4_class = classify_bh(c4());
    EXPECT_EQ(c4_class.label(), "Θ(m^3/2)");
    EXPECT_TRUE(cites(c4_class, "classifyk=4"));
    EXPECT_FALSE(c4_class.conditional);
    ASSERT_TRUE(c4_class.lower_witness.has_value());
    EXPECT_EQ(c4_class.lower_witness->describe(), "product(p=1)");
}

TEST(Classify, Labels) {
    EXPECT_EQ(classify_bh(identity(3)).label(), "Θ(1)");
    EXPECT_EQ(classify_bh(g1()).label(), "Θ(m)");
    EXPECT_EQ(classify_bh(g2()).label(), "Θ(m^2)");
}

TEST(Classify, ConditionalOnlyThroughOneByC4) {
    const AsymptoticClass c = classify_bh(*lookup_named("1x1C4"));
    EXPECT_EQ(c.exponent(), (Rational{2, 1}));
    EXPECT_TRUE(c.conditional);
    EXPECT_TRUE(cites(c, "conjC4"));

    const AsymptoticClass h = classify_bh(make_H(2, 5, 1));
    EXPECT_EQ(h.exponent(), (Rational{2, 1}));
    EXPECT_FALSE(h.conditional);
    EXPECT_FALSE(cites(h, "conjC4"));
}

TEST(Classify, OddCycleIsQuadratic) {
    SimpleGraph c5(5);
    for (int i = 0; i < 5; ++i) {
        c5.add_edge(i, (i + 1) % 5);
    }
    const AsymptoticClass c = classify_bh(incidence_matrix(c5));
    EXPECT_EQ(c.exponent(), (Rational{2, 1}));
    EXPECT_TRUE(c.conditional);
}

TEST(Classify, ChromaticTriggerGivesAtLeastQuadratic) {
    for (const BitMatrix& f : {ones_column(3), g2(), concat(g2(), identity(3))}) {
        const Rational e = exponent_of(f);
        EXPECT_GE(e.num, 2 * e.den);
    }
}

TEST(Classify, ZeroRowsAndColumns) {
    const AsymptoticClass padded = classify_bh(pad_rows(g1(), 2));
    EXPECT_EQ(padded.exponent(), (Rational{1, 1}));
    EXPECT_TRUE(has_note(padded, "zero rows stripped"));

    const AsymptoticClass with_zero = classify_bh(concat(zero_column(3), g2()));
    EXPECT_EQ(with_zero.exponent(), (Rational{2, 1}));
    EXPECT_TRUE(has_note(with_zero, "zero columns"));

    EXPECT_EQ(exponent_of(zero_column(7)), (Rational{0, 1}));
}

TEST(Classify, SmallKIsMarkedExtrapolated) {
    for (const BitMatrix& f : {identity(2), ones_column(2), ones_column(1), repeat(ones_column(1), 2)}) {
        EXPECT_TRUE(has_note(classify_bh(f), "extrapolated")) << to_literal(f);
    }
    EXPECT_FALSE(has_note(classify_bh(g2()), "extrapolated"));
}

TEST(Classify, Errors) {
    EXPECT_THROW(classify_bh(identity(6)), Error);
    EXPECT_THROW(classify_bh(BitMatrix(3)), Error);
}

TEST(Classify, InvariantUnderRowAndColumnOrder) {
    std::mt19937_64 rng(71);
    for (const auto& e : catalog()) {
        if (strip_zero_rows(e.matrix).rows() > 5) {
            continue;
        }
        const AsymptoticClass a = classify_bh(e.matrix);
        const AsymptoticClass b = classify_bh(scramble(rng, e.matrix));
        EXPECT_EQ(a.lo, b.lo) << e.name;
        EXPECT_EQ(a.conditional, b.conditional) << e.name;
    }
}

TEST(Classify, MonotoneUnderBergeContainment) {
    // F is contained in F plus a column, so its class is never larger.
    std::mt19937_64 rng(72);
    for (int i = 0; i < 40; ++i) {
        const int k = uniform(rng, 3, 4);
        const BitMatrix f = random_matrix(rng, k, uniform(rng, 1, 3));
        const BitMatrix bigger = concat(f, random_matrix(rng, k, 1));
        const Rational small = exponent_of(f);
        const Rational large = exponent_of(bigger);
        EXPECT_LE(small.num * large.den, large.num * small.den) << to_literal(f) << " / " << to_literal(bigger);
    }
}

TEST(TreeForb, Examples) {
    EXPECT_EQ(classify_treeforb(forest("5;0-1,1-2")).exponent(), (Rational{2, 1}));
    EXPECT_EQ(classify_treeforb(forest("6;0-1,2-3,4-5")).exponent(), (Rational{5, 1}));
    EXPECT_EQ(classify_treeforb(forest("5;0-1,0-2,0-3,0-4")).exponent(), (Rational{3, 1}));
    EXPECT_FALSE(classify_treeforb(forest("5;0-1,1-2")).lower_witness.has_value());
}

TEST(TreeForb, Errors) {
    EXPECT_THROW(classify_treeforb(forest("4;0-1")), Error);
    EXPECT_THROW(classify_treeforb(forest("5;0-1,1-2,0-2")), Error);
    EXPECT_THROW(classify_treeforb(identity(5)), Error);
}

TEST(TreeForb, ExponentRange) {
    for (const std::string lit : {"5;0-1", "5;0-1,2-3", "5;0-1,1-2,2-3,3-4", "6;0-1,1-2,2-3", "6;0-1,0-2,0-3"}) {
        const BitMatrix f = forest(lit);
        const int e = classify_treeforb(f).exponent().num;
        EXPECT_GE(e, f.rows() - 3) << lit;
        EXPECT_LE(e, f.rows() - 1) << lit;
    }
}

TEST(Enumerate, CountsMatchOrbitCounting) {
    for (int k = 1; k <= 4; ++k) {
        const int max_cols = k <= 3 ? 1 << k : 4;
        const auto all = enumerate_simple_matrices(k, max_cols);
        for (int c = 1; c <= max_cols; ++c) {
            const auto n = std::count_if(all.begin(), all.end(), [&](const BitMatrix& m) {
                return static_cast<int>(m.cols()) == c;
            });
            EXPECT_EQ(n, burnside_count(k, c)) << "k=" << k << " c=" << c;
        }
    }
}

TEST(Enumerate, CanonicalSimpleAndDistinct) {
    const auto all = enumerate_simple_matrices(4, 3);
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_TRUE(is_simple(all[i]));
        EXPECT_EQ(canonical_form(all[i]), all[i]);
        if (i > 0) {
            EXPECT_TRUE(canonical_less(all[i - 1], all[i]));
        }
    }
}

TEST(Corpus, ThreeRows) {
    const CorpusReport report = classify_corpus(3, 4);
    EXPECT_EQ(report.failures(), 0);
    for (const auto& e : report.entries) {
        const Rational x = e.cls.exponent();
        if (e.origin == "enumerated") {
            EXPECT_LE(x.num, 2 * x.den) << to_literal(e.matrix);
        }
    }
    ASSERT_NE(report.find(repeat(ones_column(3), 2)), nullptr);
    EXPECT_EQ(report.find(repeat(ones_column(3), 2))->cls.exponent(), (Rational{3, 1}));
}

TEST(Corpus, FourRowsHasOneSubquadraticClass) {
    const CorpusReport report = classify_corpus(4, 3);
    EXPECT_EQ(report.failures(), 0);
    int subquadratic = 0;
    for (const auto& e : report.entries) {
        if (e.cls.exponent() == Rational{3, 2}) {
            ++subquadratic;
            EXPECT_TRUE(isomorphic(e.matrix, c4()));
        }
    }
    EXPECT_EQ(subquadratic, 1);  // only the catalog C_4; enumerated matrices have 3 columns
    const CorpusReport wide = classify_corpus(4, 4);
    subquadratic = 0;
    for (const auto& e : wide.entries) {
        subquadratic += e.cls.exponent() == Rational{3, 2} ? 1 : 0;
    }
    EXPECT_EQ(subquadratic, 1);
}

TEST(Corpus, FiveRowsIsTotal) {
    const CorpusReport report = classify_corpus(5, 2);
    EXPECT_EQ(report.failures(), 0);
    for (const auto& e : report.entries) {
        if (e.cls.conditional) {
            EXPECT_TRUE(cites(e.cls, "conjC4"));
        } else {
            EXPECT_FALSE(cites(e.cls, "conjC4"));
        }
    }
}

TEST(Corpus, JsonIsDeterministic) {
    EXPECT_EQ(corpus_json(classify_corpus(3, 3)).dump(), corpus_json(classify_corpus(3, 3)).dump());
}
