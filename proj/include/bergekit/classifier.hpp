#pragma once

#include <bergekit/bit_matrix.hpp>
#include <bergekit/constructions.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bergekit {

struct Rational {
    int num = 0;
    int den = 1;

    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct Rule {
    std::string name;
    std::string anchor;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Growth class of an extremal function together with how it was derived.
struct AsymptoticClass {
    enum class Kind { Theta, BoundedBetween };

    Kind kind = Kind::Theta;
    Rational lo;
    Rational hi;
    /// True only when the derivation rests on the unproven 1_1×C_4 growth.
    bool conditional = false;
    std::vector<Rule> rules;
    std::optional<ConstructionRecipe> lower_witness;
    std::vector<std::string> notes;

    static AsymptoticClass theta(Rational exponent);
    /// Exponent of a Theta class.
    Rational exponent() const;
    /// "Θ(1)", "Θ(m)", "Θ(m^3/2)", ...
    std::string label() const;
};

struct Fact {
    std::string name;
    std::string anchor;
    std::string statement;
};

/// Cited asymptotic results. Never recomputed.
const std::vector<Fact>& fact_table();

/// Growth of Bh(m,F) for F with at most 5 nonzero rows.
AsymptoticClass classify_bh(const BitMatrix& f);

/// Growth of forb(m,F) for the incidence matrix F of a forest on k >= 5 vertices.
AsymptoticClass classify_treeforb(const BitMatrix& f);

/// Every simple k-rowed matrix with 1..max_cols columns, one canonical
/// representative per isomorphism class, in canonical order.
std::vector<BitMatrix> enumerate_simple_matrices(int k, int max_cols);

struct CorpusEntry {
    BitMatrix matrix;  // canonical form
    std::string origin;
    AsymptoticClass cls;
    bool witness_ok = true;
    /// For Θ(1) classes: solve_bh is constant over m = k+1..6.
    std::optional<bool> constant_ok;
};

struct CorpusReport {
    int k = 0;
    int max_cols = 0;
    std::vector<int> witness_rows;
    std::vector<CorpusEntry> entries;

    int failures() const;
    /// Entry whose matrix is isomorphic to `f`, if present.
    const CorpusEntry* find(const BitMatrix& f) const;
};

/// Classifies every enumerated matrix plus the repeated columns 2·(1_j 0_{k-j})
/// and the k-rowed catalog matrices, checking each lower witness at m = 8, 10, 12.
CorpusReport classify_corpus(int k, int max_cols);

}  // namespace bergekit
