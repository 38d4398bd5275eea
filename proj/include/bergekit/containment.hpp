#pragma once

#include <bergekit/bit_matrix.hpp>

#include <optional>
#include <vector>

namespace bergekit {

enum class ContainMode {
    Berge,          // F << A: 1's of F land on 1's of A
    Configuration,  // F < A: the selected submatrix equals F exactly
};

/// Witness of containment: row r of F sits on row row_map[r] of A, column j of F
/// on column col_map[j] of A. Both maps are injective.
struct Embedding {
    std::vector<int> row_map;
    std::vector<int> col_map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Searches row injections in lexicographic order and, for each, matches
/// columns of F to distinct columns of A by augmenting paths. Returns the first
/// embedding found, so results are reproducible.
std::optional<Embedding> find_embedding(const BitMatrix& f, const BitMatrix& a, ContainMode mode);

inline std::optional<Embedding> berge_contains(const BitMatrix& f, const BitMatrix& a) {
    return find_embedding(f, a, ContainMode::Berge);
}

inline std::optional<Embedding> config_contains(const BitMatrix& f, const BitMatrix& a) {
    return find_embedding(f, a, ContainMode::Configuration);
}

/// t·F << A.
bool contains_t_fold(const BitMatrix& f, int t, const BitMatrix& a);

/// Checks a witness against the mode's entry condition, including both injectivity
/// requirements and index ranges.
bool verify_embedding(const BitMatrix& f, const BitMatrix& a, const Embedding& e, ContainMode mode);

}  // namespace bergekit
