#pragma once

#include <bergekit/bit_matrix.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bergekit {

enum class SolveMode { Downset, Unrestricted, Relative };

std::string to_string(SolveMode mode);

/// Outcome of an exact search. `witness` is a maximiser with ‖witness‖ = value.
struct SolveResult {
    int value = 0;
    BitMatrix witness;
    std::uint64_t nodes = 0;
    SolveMode mode = SolveMode::Downset;
};

struct SolveOptions {
    /// Worker threads for the downset search. Values and witnesses do not depend
    /// on this; node counts may.
    int threads = 1;
};

inline constexpr int kDownsetMaxRows = 6;
inline constexpr int kUnrestrictedMaxRows = 4;
inline constexpr std::size_t kRelativeMaxColumns = 24;

/// Bh(m,F) by branch and bound over downsets of 2^[m]; shifting makes this
/// equal to the maximum over all simple m-rowed matrices. Requires 1 <= m <= 6
/// and ‖F‖ >= 1.
SolveResult solve_bh(const BitMatrix& f, int m, const SolveOptions& options = {});

/// Bh(m,F) over all simple m-rowed matrices, m <= 4. Shares no code with
/// solve_bh beyond the generic containment test.
SolveResult solve_bh_unrestricted(const BitMatrix& f, int m);

/// forb(m, family): largest simple m-rowed matrix with no member as a configuration.
SolveResult solve_forb_family(const std::vector<BitMatrix>& family, int m);

/// f(F,P): most columns of P whose submatrix avoids F as a Berge hypergraph.
SolveResult solve_relative(const BitMatrix& f, const BitMatrix& p);

}  // namespace bergekit
