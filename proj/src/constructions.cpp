#include <bergekit/constructions.hpp>
#include <bergekit/graph.hpp>

#include <numeric>

namespace bergekit {

BitMatrix expand_product(int p, int m) {
    if (p < 1) {
        throw Error("expand_product: p must be at least 1");
    }
    if (m < p) {
        throw Error("expand_product: m=" + std::to_string(m) + " is smaller than p=" + std::to_string(p));
    }
    const int part = m / p;
    BitMatrix out = identity(part);
    for (int i = 1; i < p; ++i) {
        out = product(out, identity(part));
    }
    return pad_rows(out, m - part * p);
}

BitMatrix make_H(int p, int k, int t) {
    if (p < 1 || p >= k || t < 1) {
        throw Error("make_H: need 1 <= p < k and t >= 1 (got p=" + std::to_string(p) + ", k=" +
                    std::to_string(k) + ", t=" + std::to_string(t) + ")");
    }
    const int rest = k - p;
    const BitMatrix kp_full = complete(p);
    std::vector<Column> kp(kp_full.columns().begin(), kp_full.columns().end());
    kp.pop_back();  // K_p ends with the all-ones column
    const BitMatrix kp_minus_ones(p, std::move(kp));
    const BitMatrix lead = product(ones_column(p), identity(rest));
    const BitMatrix tail = concat(product(ones_column(p), zero_column(rest)),
                                  product(kp_minus_ones, concat(zero_column(rest), identity(rest))));
    return concat(lead, repeat(tail, t));
}

BitMatrix make_generalH(const std::vector<int>& parts, int t) {
    if (parts.empty() || t < 1) {
        throw Error("make_generalH: need at least one part and t >= 1");
    }
    int total = 0;
    for (int a : parts) {
        if (a < 1) {
            throw Error("make_generalH: every part must be at least 1");
        }
        total += a;
    }
    if (total > kMaxRows) {
        throw Error("make_generalH: " + std::to_string(total) + " rows exceeds " + std::to_string(kMaxRows));
    }
    BitMatrix block = identity(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        block = product(block, identity(parts[i]));
    }
    return concat(block, repeat(strict_subcolumns(block), t));
}

BitMatrix chi_construction(const BitMatrix& f, int m) {
    const int chi = chromatic_number(graph_of(strip_zero_rows(f)));
    if (chi <= 1) {
        if (m < 0) {
            throw Error("chi_construction: negative m");
        }
        return zero_column(m);
    }
    if (m < chi - 1) {
        throw Error("chi_construction: m=" + std::to_string(m) + " below χ-1=" + std::to_string(chi - 1));
    }
    return expand_product(chi - 1, m);
}

BitMatrix ik_extremal(int k, int m) {
    if (k < 1 || m < k - 1) {
        throw Error("ik_extremal: need k >= 1 and m >= k-1");
    }
    return pad_rows(complete(k - 1), m - (k - 1));
}

BitMatrix g1_extremal(int m) {
    if (m < 2) {
        throw Error("g1_extremal: m must be at least 2");
    }
    std::vector<Column> cols{0};
    for (int r = 0; r < m; ++r) {
        cols.push_back(row_bit(r));
    }
    for (int r = 0; r + 1 < m; r += 2) {
        cols.push_back(row_bit(r) | row_bit(r + 1));
    }
    return BitMatrix(m, std::move(cols));
}

BitMatrix h2_extremal(int m) {
    if (m < 3) {
        throw Error("h2_extremal: m must be at least 3");
    }
    std::vector<Column> cols{0};
    for (int r = 0; r < m; ++r) {
        cols.push_back(row_bit(r));
    }
    for (int r = 0; r + 2 < m; r += 3) {
        const Column a = row_bit(r), b = row_bit(r + 1), c = row_bit(r + 2);
        cols.insert(cols.end(), {a | b, a | c, b | c, a | b | c});
    }
    return BitMatrix(m, std::move(cols));
}

BitMatrix h8_extremal(int m) {
    if (m < 2) {
        throw Error("h8_extremal: m must be at least 2");
    }
    std::vector<Column> cols{0};
    for (int r = 0; r < m; ++r) {
        cols.push_back(row_bit(r));
    }
    for (int r = 1; r < m; ++r) {
        cols.push_back(row_bit(0) | row_bit(r));
    }
    return BitMatrix(m, std::move(cols));
}

ConstructionRecipe ConstructionRecipe::identity_product(int p) {
    if (p < 1) {
        throw Error("identity product needs p >= 1");
    }
    ConstructionRecipe r;
    r.kind_ = Kind::IdentityProduct;
    r.p_ = p;
    return r;
}

ConstructionRecipe ConstructionRecipe::hpkt(int p, int k, int t) {
    make_H(p, k, t);  // validates parameters
    ConstructionRecipe r;
    r.kind_ = Kind::HpktMatrix;
    r.p_ = p;
    r.k_ = k;
    r.t_ = t;
    return r;
}

ConstructionRecipe ConstructionRecipe::general_h(std::vector<int> parts, int t) {
    make_generalH(parts, t);
    ConstructionRecipe r;
    r.kind_ = Kind::GeneralH;
    r.parts_ = std::move(parts);
    r.t_ = t;
    r.k_ = std::accumulate(r.parts_.begin(), r.parts_.end(), 0);
    return r;
}

ConstructionRecipe ConstructionRecipe::kclique_constant(int k) {
    if (k < 0) {
        throw Error("kclique_constant needs k >= 0");
    }
    ConstructionRecipe r;
    r.kind_ = Kind::KcliqueConstant;
    r.k_ = k;
    return r;
}

ConstructionRecipe ConstructionRecipe::catalog(std::string name) {
    if (name != "g1" && name != "h2" && name != "h8") {
        throw Error("unknown catalog construction '" + name + "'");
    }
    ConstructionRecipe r;
    r.kind_ = Kind::Catalog;
    r.name_ = std::move(name);
    return r;
}

int ConstructionRecipe::min_rows() const {
    switch (kind_) {
        case Kind::IdentityProduct: return p_;
        case Kind::HpktMatrix:
        case Kind::GeneralH: return k_;
        case Kind::KcliqueConstant: return std::max(k_ - 1, 0);
        case Kind::Catalog: return name_ == "h2" ? 3 : 2;
    }
    return 0;
}

BitMatrix ConstructionRecipe::expand(int m) const {
    if (m < min_rows()) {
        throw Error(describe() + " needs at least " + std::to_string(min_rows()) + " rows");
    }
    switch (kind_) {
        case Kind::IdentityProduct: return expand_product(p_, m);
        case Kind::HpktMatrix: return pad_rows(make_H(p_, k_, t_), m - k_);
        case Kind::GeneralH: return pad_rows(make_generalH(parts_, t_), m - k_);
        case Kind::KcliqueConstant: return k_ == 0 ? BitMatrix(m) : ik_extremal(k_, m);
        case Kind::Catalog:
            if (name_ == "g1") {
                return g1_extremal(m);
            }
            return name_ == "h2" ? h2_extremal(m) : h8_extremal(m);
    }
    throw Error("unknown recipe kind");
}

std::uint64_t ConstructionRecipe::size(int m) const {
    switch (kind_) {
        case Kind::IdentityProduct: {
            std::uint64_t s = 1;
            for (int i = 0; i < p_; ++i) {
                s *= static_cast<std::uint64_t>(m / p_);
            }
            return s;
        }
        case Kind::HpktMatrix: {
            const std::uint64_t rest = static_cast<std::uint64_t>(k_ - p_);
            return rest + static_cast<std::uint64_t>(t_) * (1 + ((std::uint64_t{1} << p_) - 1) * (rest + 1));
        }
        case Kind::GeneralH: {
            std::uint64_t full = 1;
            std::uint64_t any = 1;
            for (int a : parts_) {
                full *= static_cast<std::uint64_t>(a);
                any *= static_cast<std::uint64_t>(a + 1);
            }
            return full + static_cast<std::uint64_t>(t_) * (any - full);
        }
        case Kind::KcliqueConstant: return k_ == 0 ? 0 : std::uint64_t{1} << (k_ - 1);
        case Kind::Catalog: {
            const auto um = static_cast<std::uint64_t>(m);
            if (name_ == "g1") {
                return 3 * um / 2 + 1;
            }
            return name_ == "h2" ? 4 * (um / 3) + um + 1 : 2 * um;
        }
    }
    return 0;
}

std::string ConstructionRecipe::describe() const {
    switch (kind_) {
        case Kind::IdentityProduct: return "product(p=" + std::to_string(p_) + ")";
        case Kind::HpktMatrix:
            return "H(p=" + std::to_string(p_) + ",k=" + std::to_string(k_) + ",t=" + std::to_string(t_) + ")";
        case Kind::GeneralH: {
            std::string s = "H((";
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                s += (i ? "," : "") + std::to_string(parts_[i]);
            }
            return s + "),t=" + std::to_string(t_) + ")";
        }
        case Kind::KcliqueConstant: return "K(k-1)padded(k=" + std::to_string(k_) + ")";
        case Kind::Catalog: return "catalog(" + name_ + ")";
    }
    return "?";
}

}  // namespace bergekit
