#include <bergekit/containment.hpp>

#include <algorithm>

namespace bergekit {

namespace {

/// Fixed-width set over the columns of A, sized once per search.
class ColumnBits {
public:
    ColumnBits() = default;
    ColumnBits(std::size_t n, bool full) : words_((n + 63) / 64, full ? ~std::uint64_t{0} : 0) {
        if (full && n % 64) {
            words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
        }
    }

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    void intersect(const ColumnBits& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= o.words_[w];
        }
    }

    template <typename Fn>
    bool any_of_bits(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                if (fn(i)) {
                    return true;
                }
            }
        }
        return false;
    }

private:
    std::vector<std::uint64_t> words_;
};

/// Bipartite matching of F-columns (left) into A-columns (right) by augmenting paths.
class Matcher {
public:
    Matcher(const std::vector<ColumnBits>& cand, std::size_t right)
        : cand_(cand), owner_(right, -1), seen_(right, 0) {}

    bool perfect() {
        for (std::size_t j = 0; j < cand_.size(); ++j) {
            ++stamp_;
            if (!augment(static_cast<int>(j))) {
                return false;
            }
        }
        return true;
    }

    std::vector<int> left_assignment() const {
        std::vector<int> out(cand_.size(), -1);
        for (std::size_t a = 0; a < owner_.size(); ++a) {
            if (owner_[a] >= 0) {
                out[static_cast<std::size_t>(owner_[a])] = static_cast<int>(a);
            }
        }
        return out;
    }

private:
    bool augment(int j) {
        return cand_[static_cast<std::size_t>(j)].any_of_bits([&](std::size_t a) {
            if (seen_[a] == stamp_) {
                return false;
            }
            seen_[a] = stamp_;
            if (owner_[a] < 0 || augment(owner_[a])) {
                owner_[a] = j;
                return true;
            }
            return false;
        });
    }

    const std::vector<ColumnBits>& cand_;
    std::vector<int> owner_;
    std::vector<unsigned> seen_;
    unsigned stamp_ = 0;
};

class Search {
public:
    Search(const BitMatrix& f, const BitMatrix& a, ContainMode mode) : f_(f), a_(a), mode_(mode) {
        const std::size_t n = a.cols();
        for (int r = 0; r < a.rows(); ++r) {
            ColumnBits ones(n, false);
            ColumnBits zeros(n, false);
            for (std::size_t c = 0; c < n; ++c) {
                (a.at(r, c) ? ones : zeros).set(c);
            }
            a_ones_.push_back(std::move(ones));
            a_zeros_.push_back(std::move(zeros));
            a_row_sum_.push_back(a.row_sum(r));
        }
        for (int r = 0; r < f.rows(); ++r) {
            f_row_sum_.push_back(f.row_sum(r));
        }
        used_.assign(static_cast<std::size_t>(a.rows()), false);
        row_map_.assign(static_cast<std::size_t>(f.rows()), -1);
    }

    std::optional<Embedding> run() {
        std::vector<ColumnBits> cand(f_.cols(), ColumnBits(a_.cols(), true));
        if (!matchable(cand)) {
            return std::nullopt;
        }
        if (descend(0, cand)) {
            return Embedding{row_map_, col_map_};
        }
        return std::nullopt;
    }

private:
    bool row_compatible(int fr, int ar) const {
        const int fs = f_row_sum_[static_cast<std::size_t>(fr)];
        const int as = a_row_sum_[static_cast<std::size_t>(ar)];
        if (as < fs) {
            return false;
        }
        if (mode_ == ContainMode::Configuration) {
            const int fz = static_cast<int>(f_.cols()) - fs;
            const int az = static_cast<int>(a_.cols()) - as;
            return az >= fz;
        }
        return true;
    }

    bool matchable(const std::vector<ColumnBits>& cand) {
        for (const auto& c : cand) {
            if (c.none()) {
                return false;
            }
        }
        Matcher m(cand, a_.cols());
        if (!m.perfect()) {
            return false;
        }
        col_map_ = m.left_assignment();
        return true;
    }

    bool descend(int fr, const std::vector<ColumnBits>& cand) {
        if (fr == f_.rows()) {
            return true;  // matchable() already filled col_map_ for this candidate set
        }
        for (int ar = 0; ar < a_.rows(); ++ar) {
            if (used_[static_cast<std::size_t>(ar)] || !row_compatible(fr, ar)) {
                continue;
            }
            std::vector<ColumnBits> next = cand;
            for (std::size_t j = 0; j < f_.cols(); ++j) {
                if (f_.at(fr, j)) {
                    next[j].intersect(a_ones_[static_cast<std::size_t>(ar)]);
                } else if (mode_ == ContainMode::Configuration) {
                    next[j].intersect(a_zeros_[static_cast<std::size_t>(ar)]);
                }
            }
            if (!matchable(next)) {
                continue;
            }
            used_[static_cast<std::size_t>(ar)] = true;
            row_map_[static_cast<std::size_t>(fr)] = ar;
            if (descend(fr + 1, next)) {
                return true;
            }
            used_[static_cast<std::size_t>(ar)] = false;
        }
        return false;
    }

    const BitMatrix& f_;
    const BitMatrix& a_;
    ContainMode mode_;
    std::vector<ColumnBits> a_ones_;
    std::vector<ColumnBits> a_zeros_;
    std::vector<int> a_row_sum_;
    std::vector<int> f_row_sum_;
    std::vector<bool> used_;
    std::vector<int> row_map_;
    std::vector<int> col_map_;
};

}  // namespace

std::optional<Embedding> find_embedding(const BitMatrix& f, const BitMatrix& a, ContainMode mode) {
    if (f.rows() > a.rows() || f.cols() > a.cols()) {
        return std::nullopt;
    }
    return Search(f, a, mode).run();
}

bool contains_t_fold(const BitMatrix& f, int t, const BitMatrix& a) {
    if (t < 1) {
        throw Error("contains_t_fold: t must be at least 1");
    }
    return berge_contains(repeat(f, t), a).has_value();
}

bool verify_embedding(const BitMatrix& f, const BitMatrix& a, const Embedding& e, ContainMode mode) {
    if (e.row_map.size() != static_cast<std::size_t>(f.rows()) || e.col_map.size() != f.cols()) {
        return false;
    }
    std::vector<bool> row_used(static_cast<std::size_t>(a.rows()), false);
    for (int r : e.row_map) {
        if (r < 0 || r >= a.rows() || row_used[static_cast<std::size_t>(r)]) {
            return false;
        }
        row_used[static_cast<std::size_t>(r)] = true;
    }
    std::vector<bool> col_used(a.cols(), false);
    for (int c : e.col_map) {
        if (c < 0 || static_cast<std::size_t>(c) >= a.cols() || col_used[static_cast<std::size_t>(c)]) {
            return false;
        }
        col_used[static_cast<std::size_t>(c)] = true;
    }
    for (int i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const bool fv = f.at(i, j);
            const bool av = a.at(e.row_map[static_cast<std::size_t>(i)], static_cast<std::size_t>(e.col_map[j]));
            if (mode == ContainMode::Berge ? (fv && !av) : (fv != av)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace bergekit
