#pragma once

#include <bergekit/bit_matrix.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bergekit {

/// Loopless undirected graph on at most 62 vertices, adjacency as bit rows.
class SimpleGraph {
public:
    explicit SimpleGraph(int vertices = 0);

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
    Column neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int edge_count() const;
    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int n_;
    std::vector<Column> adj_;
};

/// G(F): rows of F, with i~j whenever some column has 1's in both rows.
SimpleGraph graph_of(const BitMatrix& f);

inline constexpr int kExactGraphMaxVertices = 12;

int clique_number(const SimpleGraph& g);
int chromatic_number(const SimpleGraph& g);
int independence_number(const SimpleGraph& g);

/// Vertex-edge incidence matrix: one sum-2 column per edge, edges in lexicographic order.
BitMatrix incidence_matrix(const SimpleGraph& g);

bool is_forest(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_bipartite_with_cycle(const SimpleGraph& g);

/// Parses "m;u-v,u-v,..." (an empty edge list is allowed: "4;").
SimpleGraph parse_graph(std::string_view literal);
std::string to_literal(const SimpleGraph& g);

}  // namespace bergekit
