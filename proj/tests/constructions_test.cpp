#include "support.hpp"

#include <bergekit/constructions.hpp>
#include <bergekit/containment.hpp>
#include <bergekit/error.hpp>
#include <bergekit/graph.hpp>
#include <bergekit/named.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace bergekit;
using namespace bergekit::testing;

namespace {

BitMatrix cols(int rows, std::vector<Column> c) { return BitMatrix(rows, std::move(c)); }

}  // namespace

TEST(Product, Examples) {
    EXPECT_EQ(expand_product(1, 4), identity(4));
    const BitMatrix p = expand_product(2, 6);
    EXPECT_EQ(p.rows(), 6);
    EXPECT_EQ(p.cols(), 9u);
    EXPECT_EQ(expand_product(2, 4), product(identity(2), identity(2)));
    EXPECT_TRUE(isomorphic(expand_product(2, 4), c4()));
    EXPECT_THROW(expand_product(3, 2), Error);
    EXPECT_THROW(expand_product(0, 2), Error);
}

TEST(Product, UnevenPartsPadWithZeroRows) {
    const BitMatrix p = expand_product(2, 7);
    EXPECT_EQ(p.rows(), 7);
    EXPECT_EQ(p.cols(), 9u);
    EXPECT_EQ(p.row_sum(6), 0);
    EXPECT_TRUE(is_simple(p));
}

TEST(Product, AvoidsRepeatedOnes) {
    for (int p = 1; p <= 4; ++p) {
        for (int m = p; m <= 12; ++m) {
            EXPECT_FALSE(berge_contains(repeat(ones_column(p), 2), expand_product(p, m))) << p << " " << m;
        }
    }
}

TEST(MakeH, H13ExpandsSymbolBySymbol) {
    const BitMatrix h = make_H(1, 3, 1);
    EXPECT_TRUE(is_simple(h));
    EXPECT_TRUE(same_columns(h, cols(3, {0b011, 0b101, 0b001, 0b000, 0b010, 0b100})));
    EXPECT_EQ(reduce_r(h), g1());
}

TEST(MakeH, H13MatchesG1WithIdentityBlocks) {
    for (int t = 1; t <= 3; ++t) {
        const BitMatrix block = concat(zero_column(3), identity(3));
        EXPECT_TRUE(same_columns(make_H(1, 3, t), concat(g1(), repeat(block, t))));
    }
}

TEST(MakeH, H23IsBergeEquivalentToOnesAndG2) {
    for (int t = 1; t <= 2; ++t) {
        const BitMatrix h = make_H(2, 3, t);
        EXPECT_TRUE(berge_contains(concat(ones_column(3), repeat(g2(), t)), h));
        EXPECT_TRUE(berge_contains(h, concat(ones_column(3), repeat(g2(), 3 * t))));
        EXPECT_FALSE(same_columns(h, concat(ones_column(3), repeat(g2(), t))));
    }
}

TEST(MakeH, ColumnCountFormula) {
    for (int k = 2; k <= 6; ++k) {
        for (int p = 1; p < k; ++p) {
            for (int t = 1; t <= 3; ++t) {
                const BitMatrix h = make_H(p, k, t);
                EXPECT_EQ(h.rows(), k);
                EXPECT_EQ(static_cast<int>(h.cols()), (k - p) + t * (1 + ((1 << p) - 1) * (k - p + 1)));
                EXPECT_EQ(ConstructionRecipe::hpkt(p, k, t).size(k), h.cols());
            }
        }
    }
    EXPECT_THROW(make_H(3, 3, 1), Error);
    EXPECT_THROW(make_H(1, 3, 0), Error);
}

TEST(GeneralH, SpecialisesToH) {
    for (int k = 2; k <= 5; ++k) {
        for (int p = 1; p < k; ++p) {
            std::vector<int> parts(static_cast<std::size_t>(p), 1);
            parts.push_back(k - p);
            for (int t = 1; t <= 2; ++t) {
                EXPECT_TRUE(same_columns(make_generalH(parts, t), make_H(p, k, t))) << p << " " << k << " " << t;
            }
        }
    }
}

TEST(GeneralH, Examples) {
    const BitMatrix h = make_generalH({1, 2, 2}, 1);
    const BitMatrix block(5, std::vector<Column>(h.columns().begin(), h.columns().begin() + 4));
    EXPECT_TRUE(isomorphic(block, product(ones_column(1), c4())));
    EXPECT_EQ(make_generalH({2}, 1), concat(identity(2), zero_column(2)));
    EXPECT_THROW(make_generalH({40, 30}, 1), Error);
    EXPECT_THROW(make_generalH({}, 1), Error);
    EXPECT_THROW(make_generalH({2, 0}, 1), Error);
}

TEST(GeneralH, AddingAColumnRaisesTheClass) {
    for (const std::vector<int>& parts : {std::vector<int>{1, 2}, {2, 2}, {1, 1, 2}, {1, 2, 2}}) {
        const int t = 1;
        const int s = static_cast<int>(parts.size());
        const BitMatrix h = make_generalH(parts, t);
        const std::set<Column> present(h.columns().begin(), h.columns().end());
        for (Column alpha = 0; alpha < (Column{1} << h.rows()); ++alpha) {
            const BitMatrix grown = concat(h, BitMatrix(h.rows(), {alpha}));
            if (popcount(alpha) == s && present.count(alpha)) {
                EXPECT_TRUE(berge_contains(repeat(ones_column(s), 2), grown));
            } else if (!present.count(alpha)) {
                EXPECT_GE(clique_number(graph_of(grown)), s + 1);
            }
        }
    }
}

TEST(Chi, Examples) {
    const BitMatrix a = chi_construction(g2(), 6);
    EXPECT_EQ(a, product(identity(3), identity(3)));
    EXPECT_FALSE(berge_contains(g2(), a));
    const BitMatrix two_ones = repeat(ones_column(2), 2);
    EXPECT_EQ(chi_construction(two_ones, 8), identity(8));
    EXPECT_FALSE(berge_contains(two_ones, chi_construction(two_ones, 8)));
    EXPECT_FALSE(berge_contains(two_ones, expand_product(2, 8)));
    EXPECT_EQ(chi_construction(identity(3), 5), zero_column(5));
}

TEST(Chi, AvoidsTheInput) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const BitMatrix f = random_matrix(rng, uniform(rng, 2, 5), uniform(rng, 1, 4));
        if (f.ones() == 0) {
            continue;
        }
        const BitMatrix a = chi_construction(f, 10);
        EXPECT_FALSE(berge_contains(f, a)) << i;
    }
}

TEST(Extremal, Identity) {
    EXPECT_EQ(ik_extremal(3, 5).cols(), 4u);
    EXPECT_FALSE(berge_contains(identity(3), ik_extremal(3, 5)));
    EXPECT_EQ(ik_extremal(1, 3), zero_column(3));
    EXPECT_TRUE(same_columns(ik_extremal(2, 2), cols(2, {0, 1})));
    for (int k = 1; k <= 5; ++k) {
        for (int m = k; m <= 8; ++m) {
            const BitMatrix a = ik_extremal(k, m);
            EXPECT_EQ(a.cols(), std::size_t{1} << (k - 1));
            EXPECT_FALSE(berge_contains(identity(k), a));
        }
    }
}

TEST(Extremal, G1) {
    EXPECT_EQ(g1_extremal(4).cols(), 7u);
    EXPECT_EQ(g1_extremal(3).cols(), 5u);
    EXPECT_TRUE(same_columns(g1_extremal(2), complete(2)));
    for (int m = 2; m <= 12; ++m) {
        const BitMatrix a = g1_extremal(m);
        EXPECT_EQ(static_cast<int>(a.cols()), 3 * m / 2 + 1);
        EXPECT_TRUE(is_simple(a));
        EXPECT_FALSE(berge_contains(g1(), a));
    }
}

TEST(Extremal, H2) {
    EXPECT_EQ(h2_extremal(6).cols(), 15u);
    EXPECT_EQ(h2_extremal(3).cols(), 8u);
    for (int m = 3; m <= 12; ++m) {
        const BitMatrix a = h2_extremal(m);
        EXPECT_EQ(static_cast<int>(a.cols()), 4 * (m / 3) + m + 1);
        EXPECT_TRUE(is_simple(a));
        EXPECT_FALSE(berge_contains(h_matrix(2), a));
    }
}

TEST(Extremal, H8) {
    for (int m = 2; m <= 12; ++m) {
        const BitMatrix a = h8_extremal(m);
        EXPECT_EQ(static_cast<int>(a.cols()), 2 * m);
        EXPECT_TRUE(is_simple(a));
        EXPECT_FALSE(berge_contains(h_matrix(8), a));
    }
}

TEST(Recipe, SizeFormulasMatchExpansion) {
    const std::vector<ConstructionRecipe> recipes{
        ConstructionRecipe::identity_product(1), ConstructionRecipe::identity_product(2),
        ConstructionRecipe::identity_product(3), ConstructionRecipe::hpkt(2, 4, 2),
        ConstructionRecipe::general_h({1, 2, 2}, 1), ConstructionRecipe::kclique_constant(0),
        ConstructionRecipe::kclique_constant(3), ConstructionRecipe::catalog("g1"),
        ConstructionRecipe::catalog("h2"), ConstructionRecipe::catalog("h8")};
    for (const auto& r : recipes) {
        for (int m = r.min_rows(); m <= 14; ++m) {
            const BitMatrix a = r.expand(m);
            EXPECT_EQ(a.rows(), m) << r.describe();
            if (r.kind() != ConstructionRecipe::Kind::HpktMatrix) {
                EXPECT_TRUE(is_simple(a)) << r.describe();
            }
            EXPECT_EQ(a.cols(), r.size(m)) << r.describe() << " m=" << m;
        }
        if (r.min_rows() > 0) {
            EXPECT_THROW(r.expand(r.min_rows() - 1), Error);
        }
    }
}

TEST(Recipe, Descriptions) {
    EXPECT_EQ(ConstructionRecipe::identity_product(2).describe(), "product(p=2)");
    EXPECT_EQ(ConstructionRecipe::hpkt(1, 3, 2).describe(), "H(p=1,k=3,t=2)");
    EXPECT_EQ(ConstructionRecipe::general_h({1, 2, 2}, 1).describe(), "H((1,2,2),t=1)");
    EXPECT_EQ(ConstructionRecipe::catalog("g1").describe(), "catalog(g1)");
    EXPECT_THROW(ConstructionRecipe::catalog("h9"), Error);
    EXPECT_THROW(ConstructionRecipe::identity_product(0), Error);
}
