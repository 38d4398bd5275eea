#pragma once

#include <bergekit/bit_matrix.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace bergekit::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Arbitrary (possibly repeated) columns.
inline BitMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<Column> bits(0, low_rows(rows));
    std::vector<Column> c(static_cast<std::size_t>(cols));
    for (auto& x : c) {
        x = bits(rng);
    }
    return BitMatrix(rows, std::move(c));
}

/// Simple matrix on `rows` rows with a random density, columns shuffled.
inline BitMatrix random_simple(std::mt19937_64& rng, int rows) {
    std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.05, 0.95)(rng));
    std::vector<Column> c;
    for (Column s = 0; s < (Column{1} << rows); ++s) {
        if (keep(rng)) {
            c.push_back(s);
        }
    }
    std::shuffle(c.begin(), c.end(), rng);
    return BitMatrix(rows, std::move(c));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Random row permutation and column shuffle of `a`.
inline BitMatrix scramble(std::mt19937_64& rng, const BitMatrix& a) {
    const BitMatrix permuted = permute_rows(a, random_permutation(rng, a.rows()));
    std::vector<Column> c(permuted.columns().begin(), permuted.columns().end());
    std::shuffle(c.begin(), c.end(), rng);
    return BitMatrix(a.rows(), std::move(c));
}

inline std::vector<Column> sorted_columns(const BitMatrix& a) {
    std::vector<Column> c(a.columns().begin(), a.columns().end());
    std::sort(c.begin(), c.end());
    return c;
}

}  // namespace bergekit::testing
