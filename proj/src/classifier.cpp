#include <bergekit/classifier.hpp>
#include <bergekit/containment.hpp>
#include <bergekit/graph.hpp>
#include <bergekit/named.hpp>
#include <bergekit/solver.hpp>

#include <algorithm>
#include <set>

namespace bergekit {

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

AsymptoticClass AsymptoticClass::theta(Rational exponent) {
    AsymptoticClass c;
    c.lo = exponent;
    c.hi = exponent;
    return c;
}

Rational AsymptoticClass::exponent() const {
    if (kind != Kind::Theta) {
        throw Error("exponent() on a class that is only bounded between two exponents");
    }
    return lo;
}

std::string AsymptoticClass::label() const {
    auto power = [](const Rational& r) -> std::string {
        if (r.num == 0) {
            return "1";
        }
        if (r == Rational{1, 1}) {
            return "m";
        }
        return "m^" + r.to_string();
    };
    if (kind == Kind::Theta) {
        return "Θ(" + power(lo) + ")";
    }
    return "Ω(" + power(lo) + ") and O(" + power(hi) + ")";
}

const std::vector<Fact>& fact_table() {
    static const std::vector<Fact> facts{
        {"identity", "Ik", "Bh(m,I_k) = 2^{k-1}"},
        {"c4", "C4", "Bh(m,C_4) is Θ(m^{3/2})"},
        {"k2t", "K2t", "Bh(m,K_{2,t}) is Θ(ex(m,K_{2,t}))"},
        {"i3ik", "I3Ik", "Bh(m,I_3×I_t) is Θ(m^2)"},
        {"tree", "tree", "Bh(m,F) is Θ(m) for the incidence matrix F of a tree"},
        {"block-ones", "block1s", "Bh(m,t·1_k) is Θ(m^k)"},
        {"hpkt", "1pxIk-p", "Bh(m,H(p,k,t)) is Θ(m^p)"},
        {"cube", "2x2x2", "Bh(m,I_2×I_2×I_2) is O(m^{11/4}) and Ω(m^{5/2})"},
        {"clique", "clique", "Bh(m,F) is Ω(m^{χ(G(F))-1})"},
        {"construction", "construction", "I_{m/p}^{×p} avoids every F with 2·1_p ≪ F"},
        {"kst-lower", "KSTlower", "Bh(m,F) is Ω(m^{3/2}) when r(F) is the incidence matrix of a graph with a cycle"},
        {"zero-rows-columns", "rowcol0s", "Bh(m,F') = Bh(m,F) for m > k when F' adds zero rows; zero columns add max{‖F‖, ·}"},
        {"one-by-c4", "conjC4", "Bh(m,1_1×C_4) is conjectured to be Θ(m^2)"},
        {"treeforb", "treeforb", "forb(m,F) for a k-vertex forest F is Θ(m^{k-3}), Θ(m^{k-2}) or Θ(m^{k-1})"},
    };
    return facts;
}

namespace {

bool has(const BitMatrix& small, const BitMatrix& big) { return berge_contains(small, big).has_value(); }

BitMatrix repeated_ones(int a, int rows) { return repeat(ones_column(a, rows - a), 2); }

std::string theorem_anchor(int k) {
    return k >= 3 ? "classifyk=" + std::to_string(k) : "extrapolated";
}

[[noreturn]] void outside_case_list(const std::string& why) {
    throw Error("classify_bh: input falls outside the case list (" + why + ")");
}

}  // namespace

AsymptoticClass classify_bh(const BitMatrix& input) {
    if (input.cols() == 0) {
        throw Error("classify_bh: F has no columns");
    }
    const BitMatrix f = strip_zero_rows(input);
    const int k = f.rows();
    if (k > 5) {
        throw Error("classify_bh: " + std::to_string(k) + " nonzero rows; only up to 5 are classified");
    }
    const int t = static_cast<int>(f.cols());
    const std::string case_anchor = theorem_anchor(k);
    AsymptoticClass out;
    auto finish = [&](AsymptoticClass c) {
        if (input.rows() != k) {
            c.notes.push_back("zero rows stripped: " + std::to_string(input.rows()) + " -> " + std::to_string(k));
        }
        if (std::any_of(f.columns().begin(), f.columns().end(), [](Column col) { return col == 0; })) {
            c.notes.push_back("zero columns do not change the class");
        }
        if (k <= 2) {
            c.notes.push_back("extrapolated: no theorem covers k <= 2; same cascade applied");
        }
        return c;
    };

    if (k == 0) {
        out = AsymptoticClass::theta({0, 1});
        out.rules.push_back({"constant-zero-matrix", "rowcol0s"});
        out.lower_witness = ConstructionRecipe::kclique_constant(0);
        return finish(out);
    }

    const SimpleGraph g = graph_of(f);
    const int omega = clique_number(g);

    // (a) top exponent
    if (has(repeated_ones(k, k), f)) {
        out = AsymptoticClass::theta({k, 1});
        out.rules.push_back({"degree-" + std::to_string(k) + "-repeated-ones", case_anchor});
        out.rules.push_back({"lower-product", "construction"});
        out.lower_witness = ConstructionRecipe::identity_product(k);
        return finish(out);
    }
    // (b), (c): exponent k-1, then e >= 3, from 2·1_e or a clique of size e+1
    for (int e = k - 1; e >= 1; --e) {
        if (e < k - 1 && e < 3) {
            break;
        }
        const bool by_ones = has(repeated_ones(e, k), f);
        const bool by_clique = omega >= e + 1;
        if (!by_ones && !by_clique) {
            continue;
        }
        if (!has(f, make_H(e, k, t))) {
            outside_case_list("not in H(" + std::to_string(e) + "," + std::to_string(k) + ",t)");
        }
        out = AsymptoticClass::theta({e, 1});
        out.rules.push_back({"degree-" + std::to_string(e) + (by_ones ? "-repeated-ones" : "-clique"), case_anchor});
        out.rules.push_back({"lower-" + std::string(by_ones ? "product" : "clique"), by_ones ? "construction" : "clique"});
        out.rules.push_back({"upper-H(p,k,t)", "1pxIk-p"});
        out.lower_witness = ConstructionRecipe::identity_product(e);
        return finish(out);
    }
    // (d) quadratic
    if (k >= 3) {
        const bool by_ones = has(repeated_ones(2, k), f);
        const int chi = chromatic_number(g);
        if (by_ones || chi >= 3) {
            const bool in_h2 = has(f, make_H(2, k, t));
            if (!in_h2 && !(k == 5 && has(f, make_generalH({1, 2, 2}, t)))) {
                outside_case_list("quadratic case not in H(2,k,t) or H((1,2,2),t)");
            }
            out = AsymptoticClass::theta({2, 1});
            out.rules.push_back({by_ones ? "quadratic-repeated-ones" : "quadratic-chromatic", case_anchor});
            out.rules.push_back({by_ones ? "lower-product" : "lower-clique", by_ones ? "construction" : "clique"});
            out.lower_witness = ConstructionRecipe::identity_product(2);
            if (k == 5 && independence_number(g) <= 2) {
                out.conditional = true;
                out.rules.push_back({"upper-1x1C4-conjecture", "conjC4"});
                out.notes.push_back("upper bound assumes Bh(m,1_1×C_4) is Θ(m^2)");
            } else {
                out.rules.push_back({"upper-H(p,k,t)", "1pxIk-p"});
            }
            return finish(out);
        }
    }
    const BitMatrix r = reduce_r(f);
    const SimpleGraph rg = graph_of(r);
    // (e) subquadratic
    const bool all_pairs =
        r.cols() > 0 && std::all_of(r.columns().begin(), r.columns().end(), [](Column c) { return popcount(c) == 2; });
    if (all_pairs && is_simple(r) && is_bipartite_with_cycle(rg)) {
        out = AsymptoticClass::theta({3, 2});
        out.rules.push_back({k == 4 ? "subquadratic-C4" : "subquadratic-bipartite-cycle", case_anchor});
        out.rules.push_back({"lower-kst", "KSTlower"});
        out.rules.push_back({k == 4 ? "upper-c4" : "upper-k2t", k == 4 ? "C4" : "K2t"});
        out.lower_witness = ConstructionRecipe::identity_product(1);
        out.notes.push_back("lower witness certifies Ω(m) only; the Ω(m^{3/2}) constructions are cited");
        return finish(out);
    }
    // (f) linear
    if (has(repeated_ones(1, k), f) || (k >= 2 && has(ones_column(2, k - 2), f))) {
        if (!is_forest(rg)) {
            outside_case_list("linear case whose graph is not a forest");
        }
        out = AsymptoticClass::theta({1, 1});
        out.rules.push_back({"linear-forest", case_anchor});
        out.rules.push_back({"upper-tree", "tree"});
        out.lower_witness = ConstructionRecipe::identity_product(1);
        return finish(out);
    }
    // (g) constant: at most one nonzero column and it has a single 1
    if (!has(f, concat(identity(k), zero_rows(k, f.cols())))) {
        outside_case_list("constant case not in [I_k | t·0_k]");
    }
    out = AsymptoticClass::theta({0, 1});
    out.rules.push_back({"constant", case_anchor});
    out.rules.push_back({"upper-identity", "Ik"});
    out.lower_witness = ConstructionRecipe::kclique_constant(f.ones());
    return finish(out);
}

AsymptoticClass classify_treeforb(const BitMatrix& f) {
    const int k = f.rows();
    if (k < 5) {
        throw Error("classify_treeforb: needs at least 5 vertices, got " + std::to_string(k));
    }
    const bool edges_only =
        std::all_of(f.columns().begin(), f.columns().end(), [](Column c) { return popcount(c) == 2; });
    if (f.cols() == 0 || !edges_only || !is_simple(f) || !is_forest(graph_of(f))) {
        throw Error("classify_treeforb: F is not the incidence matrix of a forest");
    }
    AsymptoticClass out;
    if (config_contains(f, pad_rows(h_matrix(1), k - 4))) {
        out = AsymptoticClass::theta({k - 3, 1});
        out.rules.push_back({"forest-in-H1", "treeforb"});
    } else if (config_contains(h_matrix(9), f)) {
        out = AsymptoticClass::theta({k - 1, 1});
        out.rules.push_back({"forest-contains-H9", "treeforb"});
    } else {
        out = AsymptoticClass::theta({k - 2, 1});
        out.rules.push_back({"forest-middle", "treeforb"});
    }
    out.notes.push_back("configuration bounds are cited; no lower witness is constructed");
    return out;
}

std::vector<BitMatrix> enumerate_simple_matrices(int k, int max_cols) {
    if (k < 1 || k > 6) {
        throw Error("enumerate_simple_matrices: k must be in 1..6");
    }
    const int universe = 1 << k;
    max_cols = std::min(max_cols, universe);
    std::vector<BitMatrix> all;
    std::vector<BitMatrix> level{BitMatrix(k)};
    for (int c = 1; c <= max_cols; ++c) {
        std::set<std::vector<Column>> next;
        for (const auto& base : level) {
            for (int col = 0; col < universe; ++col) {
                const auto cols = base.columns();
                if (std::find(cols.begin(), cols.end(), static_cast<Column>(col)) != cols.end()) {
                    continue;
                }
                std::vector<Column> grown(cols.begin(), cols.end());
                grown.push_back(static_cast<Column>(col));
                const BitMatrix canon = canonical_form(BitMatrix(k, std::move(grown)));
                next.emplace(canon.columns().begin(), canon.columns().end());
            }
        }
        level.clear();
        for (const auto& cols : next) {
            level.emplace_back(k, cols);
        }
        all.insert(all.end(), level.begin(), level.end());
    }
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

int CorpusReport::failures() const {
    int n = 0;
    for (const auto& e : entries) {
        if (!e.witness_ok || e.constant_ok == false) {
            ++n;
        }
    }
    return n;
}

const CorpusEntry* CorpusReport::find(const BitMatrix& f) const {
    const BitMatrix canon = canonical_form(f);
    for (const auto& e : entries) {
        if (e.matrix == canon) {
            return &e;
        }
    }
    return nullptr;
}

CorpusReport classify_corpus(int k, int max_cols) {
    if (k < 1 || k > 5 || max_cols < 1 || max_cols > 6) {
        throw Error("classify_corpus: need 1 <= k <= 5 and 1 <= max_cols <= 6");
    }
    CorpusReport report;
    report.k = k;
    report.max_cols = max_cols;
    report.witness_rows = {8, 10, 12};

    std::vector<std::pair<BitMatrix, std::string>> inputs;
    for (auto& m : enumerate_simple_matrices(k, max_cols)) {
        inputs.emplace_back(std::move(m), "enumerated");
    }
    std::set<std::vector<Column>> seen;
    for (const auto& [m, origin] : inputs) {
        seen.emplace(m.columns().begin(), m.columns().end());
    }
    auto add_variant = [&](const BitMatrix& m, const std::string& origin) {
        const BitMatrix canon = canonical_form(m);
        if (seen.emplace(canon.columns().begin(), canon.columns().end()).second) {
            inputs.emplace_back(canon, origin);
        }
    };
    for (int j = 1; j <= k; ++j) {
        add_variant(repeated_ones(j, k), "2*1_" + std::to_string(j));
    }
    for (const auto& entry : catalog()) {
        if (entry.matrix.rows() == k) {
            add_variant(entry.matrix, entry.name);
        }
    }

    for (auto& [m, origin] : inputs) {
        CorpusEntry e{m, origin, classify_bh(m), true, std::nullopt};
        if (e.cls.lower_witness) {
            for (int rows : report.witness_rows) {
                const BitMatrix w = e.cls.lower_witness->expand(rows);
                if (w.cols() != e.cls.lower_witness->size(rows) || !is_simple(w) || has(m, w)) {
                    e.witness_ok = false;
                }
            }
        }
        if (e.cls.exponent() == Rational{0, 1} && k + 1 <= kDownsetMaxRows) {
            const int first = solve_bh(m, k + 1).value;
            bool constant = true;
            for (int rows = k + 2; rows <= kDownsetMaxRows; ++rows) {
                constant = constant && solve_bh(m, rows).value == first;
            }
            e.constant_ok = constant;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace bergekit
