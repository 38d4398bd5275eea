#include <bergekit/oracle/naive.hpp>

#include <functional>

namespace bergekit::oracle {

namespace {

bool entries_fit(const BitMatrix& f, const BitMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols,
                 ContainMode mode) {
    for (int r = 0; r < f.rows(); ++r) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const bool want = f.at(r, j);
            const bool got = a.at(rows[static_cast<std::size_t>(r)], static_cast<std::size_t>(cols[j]));
            if (mode == ContainMode::Berge ? (want && !got) : (want != got)) {
                return false;
            }
        }
    }
    return true;
}

/// Calls `visit` with every injective map from [n] to [range]; stops when it returns true.
bool each_injection(int n, int range, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(range), false);
    std::function<bool(int)> go = [&](int i) {
        if (i == n) {
            return visit(map);
        }
        for (int v = 0; v < range; ++v) {
            if (used[static_cast<std::size_t>(v)]) {
                continue;
            }
            used[static_cast<std::size_t>(v)] = true;
            map[static_cast<std::size_t>(i)] = v;
            const bool done = go(i + 1);
            used[static_cast<std::size_t>(v)] = false;
            if (done) {
                return true;
            }
        }
        return false;
    };
    return go(0);
}

}  // namespace

bool naive_contains(const BitMatrix& f, const BitMatrix& a, ContainMode mode) {
    if (f.rows() > a.rows() || f.cols() > a.cols()) {
        return false;
    }
    return each_injection(f.rows(), a.rows(), [&](const std::vector<int>& rows) {
        return each_injection(static_cast<int>(f.cols()), static_cast<int>(a.cols()),
                              [&](const std::vector<int>& cols) { return entries_fit(f, a, rows, cols, mode); });
    });
}

int naive_bh(const BitMatrix& f, int m) {
    if (m < 1 || m > 4) {
        throw Error("naive_bh: m must be in 1..4");
    }
    const int universe = 1 << m;
    int best = 0;
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << universe); ++pick) {
        const int size = __builtin_popcount(pick);
        if (size <= best) {
            continue;
        }
        std::vector<Column> cols;
        for (int s = 0; s < universe; ++s) {
            if ((pick >> s) & 1U) {
                cols.push_back(static_cast<Column>(s));
            }
        }
        if (!naive_contains(f, BitMatrix(m, std::move(cols)), ContainMode::Berge)) {
            best = size;
        }
    }
    return best;
}

int naive_relative(const BitMatrix& f, const BitMatrix& p) {
    if (p.cols() > 20) {
        throw Error("naive_relative: P has too many columns");
    }
    const auto n = static_cast<std::uint32_t>(p.cols());
    int best = 0;
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << n); ++pick) {
        const int size = __builtin_popcount(pick);
        if (size <= best) {
            continue;
        }
        std::vector<Column> cols;
        for (std::uint32_t j = 0; j < n; ++j) {
            if ((pick >> j) & 1U) {
                cols.push_back(p.column(j));
            }
        }
        if (!naive_contains(f, BitMatrix(p.rows(), std::move(cols)), ContainMode::Berge)) {
            best = size;
        }
    }
    return best;
}

}  // namespace bergekit::oracle
