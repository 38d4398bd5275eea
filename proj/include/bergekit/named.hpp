#pragma once

#include <bergekit/bit_matrix.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bergekit {

enum class MatrixName {
    Identity,       // I_k
    CompleteLayer,  // K_k^l
    Complete,       // K_k
    G1,
    G2,
    H1, H2, H3, H4, H5, H6, H7, H8, H9, H10,
    F7,
    C4,
    Ones,   // 1_a 0_b
    Block,  // t·F
};

/// A matrix referred to by name. `params` holds k, (k,l), (a,b) or t as the
/// name requires; `base` is the repeated matrix of a Block.
struct NamedMatrix {
    MatrixName name;
    std::vector<int> params;
    std::shared_ptr<const BitMatrix> base;

    BitMatrix expand() const;
    std::string label() const;
};

BitMatrix g1();
BitMatrix g2();
/// H_1 .. H_10 as displayed (rows top to bottom).
BitMatrix h_matrix(int index);
BitMatrix f7();
BitMatrix c4();

struct CatalogEntry {
    std::string name;
    std::string anchor;
    BitMatrix matrix;
};

/// Every parameter-free named matrix plus the small parametrised instances used
/// throughout the tests and tools.
const std::vector<CatalogEntry>& catalog();

/// Looks up a catalog name such as "G1", "H8", "C4", "I3", "K4^2", "K3", "1_3",
/// "2*1_3" or "1x1C4". Returns nullopt when unknown.
std::optional<BitMatrix> lookup_named(std::string_view name);

}  // namespace bergekit
