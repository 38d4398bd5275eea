#include <bergekit/named.hpp>

#include <charconv>

namespace bergekit {

BitMatrix g1() { return BitMatrix::from_rows({"11", "10", "01"}); }

BitMatrix g2() { return BitMatrix::from_rows({"110", "101", "011"}); }

BitMatrix h_matrix(int index) {
    switch (index) {
        case 1: return BitMatrix::from_rows({"100", "110", "011", "001"});
        case 2: return BitMatrix::from_rows({"111", "100", "010", "001"});
        case 3: return BitMatrix::from_rows({"11", "11", "10", "01"});
        case 4: return BitMatrix::from_rows({"11100", "10011", "01010", "00101"});
        case 5: return BitMatrix::from_rows({"110", "111", "101", "011"});
        case 6: return BitMatrix::from_rows({"110", "110", "101", "011"});
        case 7: return BitMatrix::from_rows({"1100", "1010", "1001", "0111"});
        case 8: return BitMatrix::from_rows({"10", "10", "01", "01"});
        case 9: return BitMatrix::from_rows({"100", "100", "010", "010", "001", "001"});
        case 10: return BitMatrix::from_rows({"110", "100", "010", "001", "001"});
        default: throw Error("no matrix H_" + std::to_string(index));
    }
}

BitMatrix f7() {
    return BitMatrix::from_rows({
        "110110",
        "101111",
        "010101",
        "001001",
        "000010",
    });
}

BitMatrix c4() { return BitMatrix::from_rows({"1100", "0011", "1010", "0101"}); }

namespace {

int param(const NamedMatrix& m, std::size_t i) {
    if (m.params.size() <= i) {
        throw Error("named matrix missing parameter " + std::to_string(i));
    }
    return m.params[i];
}

}  // namespace

BitMatrix NamedMatrix::expand() const {
    switch (name) {
        case MatrixName::Identity: return identity(param(*this, 0));
        case MatrixName::CompleteLayer: return complete_layer(param(*this, 0), param(*this, 1));
        case MatrixName::Complete: return complete(param(*this, 0));
        case MatrixName::G1: return g1();
        case MatrixName::G2: return g2();
        case MatrixName::H1: return h_matrix(1);
        case MatrixName::H2: return h_matrix(2);
        case MatrixName::H3: return h_matrix(3);
        case MatrixName::H4: return h_matrix(4);
        case MatrixName::H5: return h_matrix(5);
        case MatrixName::H6: return h_matrix(6);
        case MatrixName::H7: return h_matrix(7);
        case MatrixName::H8: return h_matrix(8);
        case MatrixName::H9: return h_matrix(9);
        case MatrixName::H10: return h_matrix(10);
        case MatrixName::F7: return f7();
        case MatrixName::C4: return c4();
        case MatrixName::Ones: return ones_column(param(*this, 0), params.size() > 1 ? params[1] : 0);
        case MatrixName::Block:
            if (!base) {
                throw Error("block matrix without a base");
            }
            return repeat(*base, param(*this, 0));
    }
    throw Error("unknown matrix name");
}

std::string NamedMatrix::label() const {
    auto p = [&](std::size_t i) { return std::to_string(param(*this, i)); };
    switch (name) {
        case MatrixName::Identity: return "I" + p(0);
        case MatrixName::CompleteLayer: return "K" + p(0) + "^" + p(1);
        case MatrixName::Complete: return "K" + p(0);
        case MatrixName::G1: return "G1";
        case MatrixName::G2: return "G2";
        case MatrixName::F7: return "F7";
        case MatrixName::C4: return "C4";
        case MatrixName::Ones:
            return "1_" + p(0) + (params.size() > 1 && params[1] > 0 ? "0_" + p(1) : "");
        case MatrixName::Block: return p(0) + "*block";
        default:
            return "H" + std::to_string(static_cast<int>(name) - static_cast<int>(MatrixName::H1) + 1);
    }
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"G1", "classifyk=3 / G1", g1()});
        v.push_back({"G2", "classifyk=3", g2()});
        for (int i = 1; i <= 10; ++i) {
            const char* anchor = i <= 7 ? "classifyk=4" : (i == 8 ? "H8 exact bound" : "treeforb");
            v.push_back({"H" + std::to_string(i), anchor, h_matrix(i)});
        }
        v.push_back({"F7", "treeforb (F7 display)", f7()});
        v.push_back({"C4", "twoconfigs: I2xI2=C4", c4()});
        v.push_back({"I2", "Ik", identity(2)});
        v.push_back({"I3", "Ik", identity(3)});
        v.push_back({"I4", "Ik", identity(4)});
        v.push_back({"1_2", "classifyk=3 linear", ones_column(2)});
        v.push_back({"1_3", "classifyk=3 quadratic", ones_column(3)});
        v.push_back({"2*1_2", "construction", repeat(ones_column(2), 2)});
        v.push_back({"2*1_3", "classifyk=3 cubic", repeat(ones_column(3), 2)});
        v.push_back({"K4^2", "classifyk=4 cubic", complete_layer(4, 2)});
        v.push_back({"1x1C4", "conjC4: 1_1xC4 = I1xI2xI2", product(ones_column(1), c4())});
        return v;
    }();
    return entries;
}

namespace {

std::optional<int> to_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

std::optional<BitMatrix> lookup_named(std::string_view name) {
    for (const auto& e : catalog()) {
        if (e.name == name) {
            return e.matrix;
        }
    }
    if (auto star = name.find('*'); star != std::string_view::npos) {
        auto t = to_int(name.substr(0, star));
        auto inner = lookup_named(name.substr(star + 1));
        if (t && inner && *t >= 1) {
            return repeat(*inner, *t);
        }
        return std::nullopt;
    }
    if (name.size() >= 2 && name[0] == 'I') {
        if (auto k = to_int(name.substr(1))) {
            return identity(*k);
        }
    }
    if (name.size() >= 2 && name[0] == 'K') {
        auto caret = name.find('^');
        if (caret == std::string_view::npos) {
            if (auto k = to_int(name.substr(1))) {
                return complete(*k);
            }
        } else if (auto k = to_int(name.substr(1, caret - 1)), l = to_int(name.substr(caret + 1)); k && l) {
            return complete_layer(*k, *l);
        }
    }
    if (name.starts_with("1_")) {
        auto rest = name.substr(2);
        auto zero = rest.find("0_");
        if (zero == std::string_view::npos) {
            if (auto a = to_int(rest)) {
                return ones_column(*a);
            }
        } else if (auto a = to_int(rest.substr(0, zero)), b = to_int(rest.substr(zero + 2)); a && b) {
            return ones_column(*a, *b);
        }
    }
    return std::nullopt;
}

}  // namespace bergekit
