#include "support.hpp"

#include <bergekit/constructions.hpp>
#include <bergekit/containment.hpp>
#include <bergekit/error.hpp>
#include <bergekit/named.hpp>
#include <bergekit/oracle/naive.hpp>
#include <bergekit/solver.hpp>

#include <gtest/gtest.h>

using namespace bergekit;
using namespace bergekit::testing;

namespace {

void expect_valid_witness(const BitMatrix& f, int m, const SolveResult& r) {
    EXPECT_EQ(r.witness.rows(), m);
    EXPECT_EQ(static_cast<int>(r.witness.cols()), r.value);
    EXPECT_TRUE(is_simple(r.witness));
    EXPECT_FALSE(berge_contains(f, r.witness));
}

}  // namespace

TEST(SolveBh, Examples) {
    EXPECT_EQ(solve_bh(identity(2), 3).value, 2);
    EXPECT_EQ(solve_bh(g1(), 4).value, 7);
    EXPECT_EQ(solve_bh(h_matrix(8), 5).value, 10);
    EXPECT_EQ(solve_bh(BitMatrix(1, {1}), 4).value, 1);
}

TEST(SolveBh, ClosedForms) {
    for (int k = 1; k <= 4; ++k) {
        for (int m = k; m <= 6; ++m) {
            EXPECT_EQ(solve_bh(identity(k), m).value, 1 << (k - 1)) << k << " " << m;
        }
    }
    for (int m = 3; m <= 6; ++m) {
        EXPECT_EQ(solve_bh(g1(), m).value, 3 * m / 2 + 1);
    }
    for (int m = 5; m <= 6; ++m) {
        EXPECT_EQ(solve_bh(h_matrix(8), m).value, 2 * m);
    }
    EXPECT_EQ(solve_bh(h_matrix(2), 6).value, 15);
    EXPECT_EQ(solve_bh(h_matrix(2), 4).value, 9);
}

TEST(SolveBh, SmallCasesAboveTheClosedForms) {
    // On 4 rows, K_3 on three rows plus every column of sum <= 1 avoids H_8.
    const SolveResult h8 = solve_bh(h_matrix(8), 4);
    EXPECT_EQ(h8.value, 9);
    EXPECT_EQ(solve_bh_unrestricted(h_matrix(8), 4).value, 9);
    expect_valid_witness(h_matrix(8), 4, h8);
    const BitMatrix k3_block = concat(pad_rows(complete(3), 1), BitMatrix(4, {0b1000}));
    EXPECT_FALSE(oracle::naive_contains(h_matrix(8), k3_block, ContainMode::Berge));
    EXPECT_EQ(k3_block.cols(), 9u);

    // On 5 rows a triangle block plus one disjoint pair avoids H_2 with 11 columns.
    const SolveResult h2 = solve_bh(h_matrix(2), 5);
    EXPECT_EQ(h2.value, 11);
    EXPECT_FALSE(oracle::naive_contains(h_matrix(2), h2.witness, ContainMode::Berge));
}

TEST(SolveBh, Errors) {
    EXPECT_THROW(solve_bh(identity(2), 7), Error);
    EXPECT_THROW(solve_bh(identity(2), 0), Error);
    EXPECT_THROW(solve_bh(BitMatrix(2), 3), Error);
}

TEST(SolveBh, TooManyRowsGivesEverything) {
    const SolveResult r = solve_bh(identity(5), 4);
    EXPECT_EQ(r.value, 16);
    EXPECT_TRUE(same_columns(r.witness, complete(4)));
}

TEST(SolveBh, ZeroMatrixIsNeverAvoidedByNonEmpty) {
    EXPECT_EQ(solve_bh(zero_column(3), 4).value, 0);
    EXPECT_EQ(solve_bh(repeat(zero_column(2), 3), 4).value, 2);
}

TEST(SolveBh, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 60; ++i) {
        const BitMatrix f = random_matrix(rng, uniform(rng, 1, 3), uniform(rng, 1, 3));
        for (int m = 1; m <= 3; ++m) {
            EXPECT_EQ(solve_bh(f, m).value, oracle::naive_bh(f, m)) << i << " m=" << m;
        }
    }
}

TEST(SolveBh, AgreesWithUnrestrictedOnCatalog) {
    for (const auto& e : catalog()) {
        if (e.matrix.rows() > 3) {
            continue;
        }
        for (int m = 3; m <= 4; ++m) {
            EXPECT_EQ(solve_bh(e.matrix, m).value, solve_bh_unrestricted(e.matrix, m).value) << e.name;
        }
    }
}

TEST(SolveBh, WitnessesAreValid) {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 40; ++i) {
        const BitMatrix f = random_matrix(rng, uniform(rng, 1, 4), uniform(rng, 1, 4));
        if (f.ones() == 0) {
            continue;
        }
        const int m = uniform(rng, f.rows(), 6);
        expect_valid_witness(f, m, solve_bh(f, m));
    }
}

TEST(SolveBh, MonotoneInM) {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 30; ++i) {
        const BitMatrix f = random_matrix(rng, uniform(rng, 1, 4), uniform(rng, 1, 4));
        int previous = 0;
        for (int m = f.rows(); m <= 6; ++m) {
            const int v = solve_bh(f, m).value;
            EXPECT_GE(v, previous);
            previous = v;
        }
    }
}

TEST(SolveBh, ZeroRowsDoNotMatter) {
    for (const BitMatrix& f : {g1(), g2(), identity(2), h_matrix(8), ones_column(2)}) {
        for (int m = f.rows() + 1; m <= 6; ++m) {
            EXPECT_EQ(solve_bh(pad_rows(f, 1), m).value, solve_bh(f, m).value);
        }
    }
}

TEST(SolveBh, ZeroColumnAddsAtMostTheSize) {
    for (const BitMatrix& f : {g1(), g2(), identity(3), ones_column(2)}) {
        for (int m = f.rows() + 1; m <= 6; ++m) {
            const int with_zero = solve_bh(concat(zero_column(f.rows()), f), m).value;
            EXPECT_EQ(with_zero, std::max(static_cast<int>(f.cols()), solve_bh(f, m).value));
        }
    }
}

TEST(SolveBh, AllOnesMatchesConfiguration) {
    for (const BitMatrix& f : {ones_column(2), repeat(ones_column(2), 2), ones_column(3)}) {
        for (int m = 2; m <= 4; ++m) {
            EXPECT_EQ(solve_bh(f, m).value, solve_forb_family({f}, m).value);
        }
    }
}

TEST(SolveBh, BergeBelowConfiguration) {
    for (const BitMatrix& f : {identity(2), g1(), BitMatrix::from_rows({"11", "01"})}) {
        for (int m = f.rows(); m <= 4; ++m) {
            EXPECT_LE(solve_bh(f, m).value, solve_forb_family({f}, m).value);
        }
    }
}

TEST(SolveBh, ThreadsKeepValueAndWitness) {
    for (const BitMatrix& f : {g2(), h_matrix(3), c4(), repeat(ones_column(2), 2), h_matrix(2)}) {
        for (int m = 5; m <= 6; ++m) {
            const SolveResult one = solve_bh(f, m);
            for (int threads : {2, 4}) {
                const SolveResult many = solve_bh(f, m, SolveOptions{threads});
                EXPECT_EQ(many.value, one.value);
                EXPECT_EQ(many.witness, one.witness);
            }
        }
    }
}

TEST(SolveBh, Deterministic) {
    const SolveResult a = solve_bh(c4(), 6);
    const SolveResult b = solve_bh(c4(), 6);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes, b.nodes);
    EXPECT_EQ(a.mode, SolveMode::Downset);
}

TEST(Unrestricted, Examples) {
    EXPECT_EQ(solve_bh_unrestricted(ones_column(1), 3).value, 1);
    // Each row may meet at most one column, so 00, 10 and 01 all fit.
    EXPECT_EQ(solve_bh_unrestricted(repeat(ones_column(1), 2), 2).value, 3);
    EXPECT_EQ(oracle::naive_bh(repeat(ones_column(1), 2), 2), 3);
    EXPECT_THROW(solve_bh_unrestricted(identity(2), 5), Error);
    EXPECT_EQ(to_string(solve_bh_unrestricted(identity(2), 2).mode), "unrestricted");
}

TEST(ForbFamily, Examples) {
    for (int m = 2; m <= 4; ++m) {
        EXPECT_EQ(solve_forb_family(berge_family(identity(2)), m).value, solve_bh(identity(2), m).value);
    }
    EXPECT_EQ(solve_forb_family({BitMatrix(1, {1})}, 3).value, 1);
    EXPECT_LT(solve_forb_family({complete(2)}, 3).value, 8);
    EXPECT_THROW(solve_forb_family({identity(2)}, 5), Error);
}

TEST(Relative, Examples) {
    const BitMatrix grid = product(identity(3), identity(3));
    const SolveResult r = solve_relative(c4(), grid);
    EXPECT_EQ(r.value, oracle::naive_relative(c4(), grid));
    EXPECT_EQ(r.value, 6);
    EXPECT_FALSE(berge_contains(c4(), r.witness));
    EXPECT_EQ(r.mode, SolveMode::Relative);

    EXPECT_EQ(solve_relative(g2(), grid).value, 9);
    const BitMatrix p = concat(repeat(zero_column(3), 2), complete(3));
    EXPECT_EQ(solve_relative(ones_column(1), p).value, 3);
    EXPECT_THROW(solve_relative(g1(), repeat(complete(2), 7)), Error);
}

TEST(Relative, MatchesNaive) {
    std::mt19937_64 rng(64);
    for (int i = 0; i < 40; ++i) {
        const BitMatrix f = random_matrix(rng, uniform(rng, 1, 3), uniform(rng, 1, 3));
        const BitMatrix p = random_matrix(rng, uniform(rng, 2, 5), uniform(rng, 1, 9));
        EXPECT_EQ(solve_relative(f, p).value, oracle::naive_relative(f, p)) << i;
    }
}
