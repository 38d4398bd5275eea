#pragma once

#include <bergekit/error.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bergekit {

/// A column of a (0,1)-matrix, stored as the set of rows holding a 1 (bit r = row r).
using Column = std::uint64_t;

inline constexpr int kMaxRows = 62;

inline int popcount(Column c) { return __builtin_popcountll(c); }
inline bool is_subset(Column a, Column b) { return (a & ~b) == 0; }
inline Column row_bit(int r) { return Column{1} << r; }
inline Column low_rows(int k) { return k >= 64 ? ~Column{0} : (Column{1} << k) - 1; }

/// (0,1)-matrix with at most 62 rows. Columns are row subsets; column order is kept
/// for storage and display but no predicate in this library depends on it.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int rows);
    BitMatrix(int rows, std::vector<Column> columns);

    /// Rows given top to bottom as strings over {0,1}, all of equal length.
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }

    Column column(std::size_t j) const { return columns_[j]; }
    std::span<const Column> columns() const { return columns_; }

    bool at(int r, std::size_t j) const { return (columns_[j] >> r) & 1U; }
    int column_sum(std::size_t j) const { return popcount(columns_[j]); }
    int row_sum(int r) const;
    std::size_t ones() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int rows_ = 0;
    std::vector<Column> columns_;
};

// Named building blocks.
BitMatrix identity(int k);                     // I_k
BitMatrix ones_column(int a, int b = 0);       // 1_a 0_b
BitMatrix zero_column(int k);                  // 0_k
BitMatrix complete_layer(int k, int l);        // K_k^l, columns in colex order
BitMatrix complete(int k);                     // K_k = [K_k^0 K_k^1 ... K_k^k]
BitMatrix zero_rows(int k, std::size_t cols);  // k x cols matrix of 0's

bool is_simple(const BitMatrix& a);

/// [A | B]. Throws on row-count mismatch.
BitMatrix concat(const BitMatrix& a, const BitMatrix& b);

/// t·A = [A A ... A].
BitMatrix repeat(const BitMatrix& a, int t);

/// A×B: every column of A stacked on every column of B, A-major order.
BitMatrix product(const BitMatrix& a, const BitMatrix& b);

/// A^c.
BitMatrix complement(const BitMatrix& a);

/// r(A): drops columns of sum 0 or 1.
BitMatrix reduce_r(const BitMatrix& a);

/// S(A): one column per distinct proper subset of some column of A, ordered by
/// (column sum, colex).
BitMatrix strict_subcolumns(const BitMatrix& a);

/// Deletes every all-zero row, keeping relative order of the others.
BitMatrix strip_zero_rows(const BitMatrix& a);

/// Appends `count` zero rows at the bottom.
BitMatrix pad_rows(const BitMatrix& a, int count);

/// Applies a row permutation: row r of the input becomes row perm[r].
BitMatrix permute_rows(const BitMatrix& a, std::span<const int> perm);

/// True when both hold the same multiset of columns.
bool same_columns(const BitMatrix& a, const BitMatrix& b);

inline constexpr int kCanonicalMaxRows = 10;

/// Least matrix over all row permutations, with columns sorted ascending.
/// Two matrices share a canonical form iff they are equal up to row and column
/// permutation. Exhaustive over rows, so limited to 10 rows.
BitMatrix canonical_form(const BitMatrix& a);

bool isomorphic(const BitMatrix& a, const BitMatrix& b);

inline constexpr int kBergeFamilyMaxZeros = 20;

/// B(F): every matrix obtained from F by turning some of its 0's into 1's,
/// deduplicated up to isomorphism. Results are canonical forms in ascending order.
std::vector<BitMatrix> berge_family(const BitMatrix& f);

/// Number of matrices in B(F) before isomorphism reduction (2^zeros).
std::size_t berge_family_raw_size(const BitMatrix& f);

/// Lexicographic compare of canonical representations (rows, then column list).
bool canonical_less(const BitMatrix& a, const BitMatrix& b);

}  // namespace bergekit
