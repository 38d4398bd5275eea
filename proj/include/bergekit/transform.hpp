#pragma once

#include <bergekit/bit_matrix.hpp>

#include <vector>

namespace bergekit {

/// A simple matrix whose column family is closed under taking subsets.
class Downset {
public:
    /// Throws unless `members` is simple and subset-closed.
    explicit Downset(BitMatrix members);

    int universe_size() const { return members_.rows(); }
    const BitMatrix& members() const { return members_; }

private:
    BitMatrix members_;
};

bool is_downset(const BitMatrix& a);

/// T_i: in one left-to-right pass, each column with a 1 in row i loses that 1
/// unless the shifted column already occurs (among the original columns or
/// those produced earlier in the pass). Requires a simple input.
BitMatrix shift_row(const BitMatrix& a, int row);

/// Applies T_0, T_1, ..., T_{m-1} cyclically until a whole sweep changes nothing.
Downset shift_fixpoint(const BitMatrix& a);

/// Deletes, for each S in `supports`, all columns containing S whenever there
/// are between 1 and c of them; repeats until stable.
BitMatrix prune_support_columns(const BitMatrix& a, const std::vector<Column>& supports, int c);

}  // namespace bergekit
