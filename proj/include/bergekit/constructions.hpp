#pragma once

#include <bergekit/bit_matrix.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bergekit {

/// p-fold product of identities on ⌊m/p⌋ rows each; the m mod p leftover rows
/// are zero rows. Requires 1 <= p <= m.
BitMatrix expand_product(int p, int m);

/// H(p,k,t) = [1_p×I_{k-p} | t·[1_p×0_{k-p} | (K_p∖1_p)×[0_{k-p} I_{k-p}]]],
/// columns left to right as written. Requires 1 <= p < k and t >= 1.
BitMatrix make_H(int p, int k, int t);

/// H((a_1..a_s),t) = [P | t·S(P)] with P = I_{a_1}×...×I_{a_s}.
BitMatrix make_generalH(const std::vector<int>& parts, int t);

/// The (χ(G(F))-1)-fold identity product on m rows; a single zero column when χ <= 1.
BitMatrix chi_construction(const BitMatrix& f, int m);

/// K_{k-1} padded with zero rows to m rows: 2^{k-1} columns, I_k-free.
BitMatrix ik_extremal(int k, int m);

/// All columns of sum <= 1 plus ⌊m/2⌋ disjoint pairs: ⌊3m/2⌋+1 columns, G_1-free.
BitMatrix g1_extremal(int m);

/// ⌊m/3⌋ disjoint triples, the three pairs under each, and all columns of sum <= 1.
BitMatrix h2_extremal(int m);

/// The m-1 pairs through row 0 plus all columns of sum <= 1: 2m columns, H_8-free.
BitMatrix h8_extremal(int m);

/// Symbolic lower-bound construction, expandable at any m.
class ConstructionRecipe {
public:
    enum class Kind { IdentityProduct, HpktMatrix, GeneralH, KcliqueConstant, Catalog };

    static ConstructionRecipe identity_product(int p);
    static ConstructionRecipe hpkt(int p, int k, int t);
    static ConstructionRecipe general_h(std::vector<int> parts, int t);
    /// ik_extremal(k, m); k = 0 denotes the empty matrix.
    static ConstructionRecipe kclique_constant(int k);
    /// One of "g1", "h2", "h8".
    static ConstructionRecipe catalog(std::string name);

    Kind kind() const { return kind_; }
    int p() const { return p_; }
    int k() const { return k_; }
    int t() const { return t_; }
    const std::vector<int>& parts() const { return parts_; }
    const std::string& name() const { return name_; }

    /// Smallest m the recipe expands at.
    int min_rows() const;
    BitMatrix expand(int m) const;
    /// Closed-form ‖expand(m)‖.
    std::uint64_t size(int m) const;
    /// Short tag such as "product(p=2)" or "H(p=1,k=3,t=2)".
    std::string describe() const;

    friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;

private:
    Kind kind_ = Kind::KcliqueConstant;
    int p_ = 0;
    int k_ = 0;
    int t_ = 0;
    std::vector<int> parts_;
    std::string name_;
};

}  // namespace bergekit
