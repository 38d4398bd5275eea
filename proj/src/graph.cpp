#include <bergekit/graph.hpp>

#include <charconv>
#include <functional>
#include <numeric>

namespace bergekit {

SimpleGraph::SimpleGraph(int vertices) : n_(vertices), adj_(static_cast<std::size_t>(std::max(vertices, 0)), 0) {
    if (vertices < 0 || vertices > kMaxRows) {
        throw Error("graph: vertex count " + std::to_string(vertices) + " out of range");
    }
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw Error("graph: edge endpoint out of range");
    }
    if (u == v) {
        throw Error("graph: loops are not allowed");
    }
    adj_[static_cast<std::size_t>(u)] |= row_bit(v);
    adj_[static_cast<std::size_t>(v)] |= row_bit(u);
}

int SimpleGraph::edge_count() const {
    int twice = 0;
    for (Column a : adj_) {
        twice += popcount(a);
    }
    return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (adjacent(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

SimpleGraph graph_of(const BitMatrix& f) {
    SimpleGraph g(f.rows());
    for (Column c : f.columns()) {
        for (Column x = c; x; x &= x - 1) {
            const int u = __builtin_ctzll(x);
            for (Column y = x & (x - 1); y; y &= y - 1) {
                g.add_edge(u, __builtin_ctzll(y));
            }
        }
    }
    return g;
}

namespace {

void require_exact_regime(const SimpleGraph& g) {
    if (g.vertex_count() > kExactGraphMaxVertices) {
        throw Error("graph invariants are exact only up to " + std::to_string(kExactGraphMaxVertices) +
                    " vertices");
    }
}

int max_clique(const SimpleGraph& g, Column candidates, int size, int best) {
    if (candidates == 0) {
        return std::max(size, best);
    }
    while (candidates) {
        if (size + popcount(candidates) <= best) {
            return best;
        }
        const int v = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        best = max_clique(g, candidates & g.neighbours(v), size + 1, best);
    }
    return std::max(size, best);
}

bool colourable(const SimpleGraph& g, int colours) {
    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::function<bool(int, int)> assign = [&](int v, int used) {
        if (v == n) {
            return true;
        }
        for (int c = 0; c < std::min(colours, used + 1); ++c) {
            bool clash = false;
            for (Column nb = g.neighbours(v); nb; nb &= nb - 1) {
                if (colour[static_cast<std::size_t>(__builtin_ctzll(nb))] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) {
                continue;
            }
            colour[static_cast<std::size_t>(v)] = c;
            if (assign(v + 1, std::max(used, c + 1))) {
                return true;
            }
            colour[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return assign(0, 0);
}

SimpleGraph complement_graph(const SimpleGraph& g) {
    SimpleGraph h(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v)) {
                h.add_edge(u, v);
            }
        }
    }
    return h;
}

}  // namespace

int clique_number(const SimpleGraph& g) {
    require_exact_regime(g);
    return max_clique(g, low_rows(g.vertex_count()), 0, 0);
}

int chromatic_number(const SimpleGraph& g) {
    require_exact_regime(g);
    if (g.vertex_count() == 0) {
        return 0;
    }
    for (int k = std::max(clique_number(g), 1);; ++k) {
        if (colourable(g, k)) {
            return k;
        }
    }
}

int independence_number(const SimpleGraph& g) {
    require_exact_regime(g);
    return clique_number(complement_graph(g));
}

BitMatrix incidence_matrix(const SimpleGraph& g) {
    std::vector<Column> cols;
    for (auto [u, v] : g.edges()) {
        cols.push_back(row_bit(u) | row_bit(v));
    }
    return BitMatrix(g.vertex_count(), std::move(cols));
}

namespace {

int component_count(const SimpleGraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    int components = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        const int a = find(u);
        const int b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

}  // namespace

bool is_forest(const SimpleGraph& g) { return g.edge_count() == g.vertex_count() - component_count(g); }

bool is_bipartite(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (Column nb = g.neighbours(u); nb; nb &= nb - 1) {
                const int v = __builtin_ctzll(nb);
                if (side[static_cast<std::size_t>(v)] < 0) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_bipartite_with_cycle(const SimpleGraph& g) { return is_bipartite(g) && !is_forest(g); }

SimpleGraph parse_graph(std::string_view literal) {
    const auto semi = literal.find(';');
    if (semi == std::string_view::npos) {
        throw Error("graph literal: expected \"m;u-v,...\"");
    }
    auto parse_int = [](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw Error("graph literal: bad integer '" + std::string(s) + "'");
        }
        return v;
    };
    SimpleGraph g(parse_int(literal.substr(0, semi)));
    std::string_view rest = literal.substr(semi + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view edge = rest.substr(0, comma);
        const auto dash = edge.find('-');
        if (dash == std::string_view::npos) {
            throw Error("graph literal: edge without '-'");
        }
        g.add_edge(parse_int(edge.substr(0, dash)), parse_int(edge.substr(dash + 1)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return g;
}

std::string to_literal(const SimpleGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

}  // namespace bergekit
