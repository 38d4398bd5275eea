#include <bergekit/bit_matrix.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace bergekit {

namespace {

void check_rows(int rows) {
    if (rows < 0 || rows > kMaxRows) {
        throw Error("row count " + std::to_string(rows) + " outside 0.." + std::to_string(kMaxRows));
    }
}

Column permute_column(Column c, std::span<const int> perm) {
    Column out = 0;
    while (c) {
        int r = __builtin_ctzll(c);
        c &= c - 1;
        out |= row_bit(perm[r]);
    }
    return out;
}

}  // namespace

BitMatrix::BitMatrix(int rows) : rows_(rows) { check_rows(rows); }

BitMatrix::BitMatrix(int rows, std::vector<Column> columns) : rows_(rows), columns_(std::move(columns)) {
    check_rows(rows);
    const Column mask = low_rows(rows);
    for (Column c : columns_) {
        if (c & ~mask) {
            throw Error("column has a 1 below row " + std::to_string(rows - 1));
        }
    }
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) {
        return BitMatrix{};
    }
    const std::size_t width = rows.front().size();
    std::vector<Column> cols(width, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) {
            throw Error("ragged row " + std::to_string(r));
        }
        for (std::size_t j = 0; j < width; ++j) {
            char ch = rows[r][j];
            if (ch == '1') {
                cols[j] |= row_bit(static_cast<int>(r));
            } else if (ch != '0') {
                throw Error(std::string("unexpected character '") + ch + "' in matrix row");
            }
        }
    }
    return BitMatrix(static_cast<int>(rows.size()), std::move(cols));
}

int BitMatrix::row_sum(int r) const {
    int s = 0;
    for (Column c : columns_) {
        s += static_cast<int>((c >> r) & 1U);
    }
    return s;
}

std::size_t BitMatrix::ones() const {
    std::size_t s = 0;
    for (Column c : columns_) {
        s += static_cast<std::size_t>(popcount(c));
    }
    return s;
}

BitMatrix identity(int k) {
    check_rows(k);
    std::vector<Column> cols;
    for (int r = 0; r < k; ++r) {
        cols.push_back(row_bit(r));
    }
    return BitMatrix(k, std::move(cols));
}

BitMatrix ones_column(int a, int b) {
    if (a < 0 || b < 0) {
        throw Error("negative size in 1_a0_b");
    }
    return BitMatrix(a + b, {low_rows(a)});
}

BitMatrix zero_column(int k) { return BitMatrix(k, {Column{0}}); }

BitMatrix complete_layer(int k, int l) {
    check_rows(k);
    if (k > 20) {
        throw Error("K_k^l limited to 20 rows");
    }
    std::vector<Column> cols;
    if (l < 0 || l > k) {
        return BitMatrix(k, {});
    }
    for (Column c = 0; c < (Column{1} << k); ++c) {
        if (popcount(c) == l) {
            cols.push_back(c);
        }
    }
    return BitMatrix(k, std::move(cols));
}

BitMatrix complete(int k) {
    BitMatrix out(k);
    for (int l = 0; l <= k; ++l) {
        out = concat(out, complete_layer(k, l));
    }
    return out;
}

BitMatrix zero_rows(int k, std::size_t cols) { return BitMatrix(k, std::vector<Column>(cols, 0)); }

bool is_simple(const BitMatrix& a) {
    std::vector<Column> cols(a.columns().begin(), a.columns().end());
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

BitMatrix concat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) {
        throw Error("concat: row counts differ (" + std::to_string(a.rows()) + " vs " +
                    std::to_string(b.rows()) + ")");
    }
    std::vector<Column> cols(a.columns().begin(), a.columns().end());
    cols.insert(cols.end(), b.columns().begin(), b.columns().end());
    return BitMatrix(a.rows(), std::move(cols));
}

BitMatrix repeat(const BitMatrix& a, int t) {
    if (t < 0) {
        throw Error("repeat: negative multiplicity");
    }
    std::vector<Column> cols;
    cols.reserve(a.cols() * static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        cols.insert(cols.end(), a.columns().begin(), a.columns().end());
    }
    return BitMatrix(a.rows(), std::move(cols));
}

BitMatrix product(const BitMatrix& a, const BitMatrix& b) {
    const int rows = a.rows() + b.rows();
    if (rows > kMaxRows) {
        throw Error("product: " + std::to_string(rows) + " rows exceeds " + std::to_string(kMaxRows));
    }
    std::vector<Column> cols;
    cols.reserve(a.cols() * b.cols());
    for (Column top : a.columns()) {
        for (Column bottom : b.columns()) {
            cols.push_back(top | (bottom << a.rows()));
        }
    }
    return BitMatrix(rows, std::move(cols));
}

BitMatrix complement(const BitMatrix& a) {
    const Column mask = low_rows(a.rows());
    std::vector<Column> cols;
    for (Column c : a.columns()) {
        cols.push_back(~c & mask);
    }
    return BitMatrix(a.rows(), std::move(cols));
}

BitMatrix reduce_r(const BitMatrix& a) {
    std::vector<Column> cols;
    for (Column c : a.columns()) {
        if (popcount(c) >= 2) {
            cols.push_back(c);
        }
    }
    return BitMatrix(a.rows(), std::move(cols));
}

BitMatrix strict_subcolumns(const BitMatrix& a) {
    std::set<Column> seen;
    for (Column c : a.columns()) {
        // Enumerate proper submasks of c, including the empty set.
        for (Column s = (c - 1) & c;; s = (s - 1) & c) {
            if (c != 0) {
                seen.insert(s);
            }
            if (s == 0) {
                break;
            }
        }
    }
    std::vector<Column> cols(seen.begin(), seen.end());
    std::stable_sort(cols.begin(), cols.end(),
                     [](Column x, Column y) { return popcount(x) < popcount(y); });
    return BitMatrix(a.rows(), std::move(cols));
}

BitMatrix strip_zero_rows(const BitMatrix& a) {
    Column used = 0;
    for (Column c : a.columns()) {
        used |= c;
    }
    std::vector<int> target(static_cast<std::size_t>(a.rows()), -1);
    int next = 0;
    for (int r = 0; r < a.rows(); ++r) {
        if ((used >> r) & 1U) {
            target[static_cast<std::size_t>(r)] = next++;
        }
    }
    std::vector<Column> cols;
    for (Column c : a.columns()) {
        cols.push_back(permute_column(c, target));
    }
    return BitMatrix(next, std::move(cols));
}

BitMatrix pad_rows(const BitMatrix& a, int count) {
    return BitMatrix(a.rows() + count, std::vector<Column>(a.columns().begin(), a.columns().end()));
}

BitMatrix permute_rows(const BitMatrix& a, std::span<const int> perm) {
    if (perm.size() != static_cast<std::size_t>(a.rows())) {
        throw Error("permute_rows: permutation size mismatch");
    }
    std::vector<Column> cols;
    for (Column c : a.columns()) {
        cols.push_back(permute_column(c, perm));
    }
    return BitMatrix(a.rows(), std::move(cols));
}

bool same_columns(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    std::vector<Column> x(a.columns().begin(), a.columns().end());
    std::vector<Column> y(b.columns().begin(), b.columns().end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

BitMatrix canonical_form(const BitMatrix& a) {
    if (a.rows() > kCanonicalMaxRows) {
        throw Error("canonical_form: " + std::to_string(a.rows()) + " rows exceeds brute-force limit " +
                    std::to_string(kCanonicalMaxRows));
    }
    std::vector<int> perm(static_cast<std::size_t>(a.rows()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Column> best(a.columns().begin(), a.columns().end());
    std::sort(best.begin(), best.end());
    std::vector<Column> cur(a.cols());
    do {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cur[j] = permute_column(a.column(j), perm);
        }
        std::sort(cur.begin(), cur.end());
        if (cur < best) {
            best = cur;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BitMatrix(a.rows(), std::move(best));
}

bool isomorphic(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.ones() != b.ones()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

bool canonical_less(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) {
        return a.rows() < b.rows();
    }
    return std::lexicographical_compare(a.columns().begin(), a.columns().end(), b.columns().begin(),
                                        b.columns().end());
}

std::size_t berge_family_raw_size(const BitMatrix& f) {
    const std::size_t zeros = static_cast<std::size_t>(f.rows()) * f.cols() - f.ones();
    if (zeros > kBergeFamilyMaxZeros) {
        throw Error("berge_family: " + std::to_string(zeros) + " zero entries exceeds " +
                    std::to_string(kBergeFamilyMaxZeros));
    }
    return std::size_t{1} << zeros;
}

std::vector<BitMatrix> berge_family(const BitMatrix& f) {
    const std::size_t raw = berge_family_raw_size(f);
    // Positions of the 0 entries, in column-major order.
    std::vector<std::pair<std::size_t, int>> zeros;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        for (int r = 0; r < f.rows(); ++r) {
            if (!f.at(r, j)) {
                zeros.emplace_back(j, r);
            }
        }
    }
    std::vector<BitMatrix> out;
    std::vector<Column> cols(f.columns().begin(), f.columns().end());
    for (std::size_t flip = 0; flip < raw; ++flip) {
        std::vector<Column> b = cols;
        for (std::size_t z = 0; z < zeros.size(); ++z) {
            if ((flip >> z) & 1U) {
                b[zeros[z].first] |= row_bit(zeros[z].second);
            }
        }
        out.push_back(canonical_form(BitMatrix(f.rows(), std::move(b))));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace bergekit
