#include <bergekit/containment.hpp>
#include <bergekit/solver.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

namespace bergekit {

std::string to_string(SolveMode mode) {
    switch (mode) {
        case SolveMode::Downset: return "downset";
        case SolveMode::Unrestricted: return "unrestricted";
        case SolveMode::Relative: return "relative";
    }
    return "?";
}

namespace {

/// Subfamily of 2^[m] (m <= 6): bit s is set iff subset s is present.
using Family = std::uint64_t;

inline Family family_bit(int s) { return Family{1} << s; }

/// All subsets of [m] ordered by size, then colex.
std::vector<int> subsets_by_size(int m) {
    std::vector<int> order(std::size_t{1} << m);
    for (std::size_t s = 0; s < order.size(); ++s) {
        order[s] = static_cast<int>(s);
    }
    std::stable_sort(order.begin(), order.end(), [](int a, int b) { return popcount(a) < popcount(b); });
    return order;
}

/// Decides whether adding one subset to an F-free family creates a Berge copy of F.
class BergeKernel {
public:
    BergeKernel(const BitMatrix& f, int m) : total_cols_(static_cast<int>(f.cols())), relevant_(std::size_t{1} << m) {
        const int universe = 1 << m;
        std::vector<Family> up(static_cast<std::size_t>(universe), 0);
        for (int a = 0; a < universe; ++a) {
            for (int s = 0; s < universe; ++s) {
                if (is_subset(static_cast<Column>(a), static_cast<Column>(s))) {
                    up[static_cast<std::size_t>(a)] |= family_bit(s);
                }
            }
        }
        // Zero rows of F are free once m >= rows(F); zero columns only need spare columns.
        const BitMatrix core = strip_zero_rows(f);
        std::vector<Column> support;
        for (Column c : core.columns()) {
            if (c) {
                support.push_back(c);
            }
        }
        if (support.empty()) {
            return;
        }
        std::set<std::vector<Column>> seen;
        std::vector<int> image(static_cast<std::size_t>(core.rows()));
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        std::function<void(int)> place = [&](int r) {
            if (r == core.rows()) {
                std::vector<Column> imgs;
                for (Column c : support) {
                    Column out = 0;
                    for (Column x = c; x; x &= x - 1) {
                        out |= row_bit(image[static_cast<std::size_t>(__builtin_ctzll(x))]);
                    }
                    imgs.push_back(out);
                }
                std::sort(imgs.begin(), imgs.end());
                if (!seen.insert(imgs).second) {
                    return;
                }
                std::vector<Family> sup;
                for (Column img : imgs) {
                    sup.push_back(up[img]);
                }
                const int id = static_cast<int>(placements_.size());
                placements_.push_back(std::move(sup));
                for (int s = 0; s < universe; ++s) {
                    for (Column img : imgs) {
                        if (is_subset(img, static_cast<Column>(s))) {
                            relevant_[static_cast<std::size_t>(s)].push_back(id);
                            break;
                        }
                    }
                }
                return;
            }
            for (int a = 0; a < m; ++a) {
                if (!used[static_cast<std::size_t>(a)]) {
                    used[static_cast<std::size_t>(a)] = true;
                    image[static_cast<std::size_t>(r)] = a;
                    place(r + 1);
                    used[static_cast<std::size_t>(a)] = false;
                }
            }
        };
        place(0);
        any_support_ = true;
    }

    /// Precondition: `family` avoids F. True iff family ∪ {s} contains F.
    bool completes(Family family, int s) const {
        const Family grown = family | family_bit(s);
        if (popcount(grown) < total_cols_) {
            return false;
        }
        if (!any_support_) {
            return true;
        }
        for (int id : relevant_[static_cast<std::size_t>(s)]) {
            if (matches(placements_[static_cast<std::size_t>(id)], grown)) {
                return true;
            }
        }
        return false;
    }

private:
    static bool matches(const std::vector<Family>& sup, Family family) {
        for (Family c : sup) {
            if ((c & family) == 0) {
                return false;
            }
        }
        int owner[64];
        std::fill(std::begin(owner), std::end(owner), -1);
        Family visited = 0;
        std::function<bool(int)> augment = [&](int j) {
            Family cand = sup[static_cast<std::size_t>(j)] & family & ~visited;
            while (cand) {
                const int a = __builtin_ctzll(cand);
                visited |= family_bit(a);
                if (owner[a] < 0 || augment(owner[a])) {
                    owner[a] = j;
                    return true;
                }
                cand &= ~visited;
            }
            return false;
        };
        for (std::size_t j = 0; j < sup.size(); ++j) {
            visited = 0;
            if (!augment(static_cast<int>(j))) {
                return false;
            }
        }
        return true;
    }

    int total_cols_;
    bool any_support_ = false;
    std::vector<std::vector<Family>> placements_;
    std::vector<std::vector<int>> relevant_;
};

class DownsetSearch {
public:
    DownsetSearch(const BergeKernel& kernel, int m)
        : kernel_(kernel), m_(m), universe_(1 << m), order_(subsets_by_size(m)) {
        up_.assign(static_cast<std::size_t>(universe_), 0);
        for (int a = 0; a < universe_; ++a) {
            for (int s = 0; s < universe_; ++s) {
                if (is_subset(static_cast<Column>(a), static_cast<Column>(s))) {
                    up_[static_cast<std::size_t>(a)] |= family_bit(s);
                }
            }
        }
        remaining_.assign(static_cast<std::size_t>(universe_) + 1, 0);
        for (int i = universe_ - 1; i >= 0; --i) {
            remaining_[static_cast<std::size_t>(i)] =
                remaining_[static_cast<std::size_t>(i) + 1] | family_bit(order_[static_cast<std::size_t>(i)]);
        }
    }

    struct Node {
        int idx;
        Family inc;
        Family dead;
    };

    struct Context {
        int best = -1;
        Family best_inc = 0;
        std::uint64_t nodes = 0;
        std::atomic<int>* global = nullptr;
        // Frontier collection mode: stop after `cut` branchings and store the node.
        std::vector<Node>* frontier = nullptr;
        int cut = 0;
    };

    void explore(Node node, int depth, Context& ctx) const {
        if (ctx.frontier && depth == ctx.cut) {
            ctx.frontier->push_back(node);
            return;
        }
        ++ctx.nodes;
        const int size = popcount(node.inc);
        if (!ctx.frontier && size > ctx.best) {
            ctx.best = size;
            ctx.best_inc = node.inc;
            if (ctx.global) {
                int seen = ctx.global->load();
                while (seen < size && !ctx.global->compare_exchange_weak(seen, size)) {
                }
            }
        }
        int idx = node.idx;
        while (idx < universe_ && ((node.dead >> order_[static_cast<std::size_t>(idx)]) & 1U)) {
            ++idx;
        }
        if (idx == universe_) {
            return;
        }
        if (!ctx.frontier) {
            const int bound = size + popcount(~node.dead & remaining_[static_cast<std::size_t>(idx)]);
            if (bound <= ctx.best || (ctx.global && bound < ctx.global->load())) {
                return;
            }
        }
        const int s = order_[static_cast<std::size_t>(idx)];
        // Rows whose singleton is absent are zero rows; keep them last.
        const bool forced_out = popcount(s) == 1 && s > 1 && ((node.dead >> (s >> 1)) & 1U);
        if (!forced_out && !kernel_.completes(node.inc, s)) {
            explore({idx + 1, node.inc | family_bit(s), node.dead}, depth + 1, ctx);
            explore({idx + 1, node.inc, node.dead | up_[static_cast<std::size_t>(s)]}, depth + 1, ctx);
        } else {
            explore({idx + 1, node.inc, node.dead | up_[static_cast<std::size_t>(s)]}, depth, ctx);
        }
    }

    BitMatrix to_matrix(Family inc) const {
        std::vector<Column> cols;
        for (int s : order_) {
            if ((inc >> s) & 1U) {
                cols.push_back(static_cast<Column>(s));
            }
        }
        return BitMatrix(m_, std::move(cols));
    }

    SolveResult run(int threads) const {
        const Node root{0, 0, 0};
        SolveResult result;
        result.mode = SolveMode::Downset;
        if (threads <= 1) {
            Context ctx;
            explore(root, 0, ctx);
            result.value = ctx.best;
            result.witness = to_matrix(ctx.best_inc);
            result.nodes = ctx.nodes;
            return result;
        }
        std::vector<Node> frontier;
        Context collect;
        collect.frontier = &frontier;
        collect.cut = 10;
        explore(root, 0, collect);

        std::atomic<int> global{-1};
        std::atomic<std::size_t> next{0};
        std::vector<Context> local(frontier.size());
        auto worker = [&] {
            for (std::size_t i = next++; i < frontier.size(); i = next++) {
                local[i].global = &global;
                explore(frontier[i], 0, local[i]);
            }
        };
        {
            std::vector<std::jthread> pool;
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back(worker);
            }
        }
        result.value = global.load();
        result.nodes = collect.nodes;
        bool found = false;
        for (const auto& ctx : local) {
            result.nodes += ctx.nodes;
            // Ties are never pruned inside a task, so the first task reaching the
            // optimum yields the same witness as the sequential search.
            if (!found && ctx.best == result.value) {
                result.witness = to_matrix(ctx.best_inc);
                found = true;
            }
        }
        return result;
    }

private:
    const BergeKernel& kernel_;
    int m_;
    int universe_;
    std::vector<int> order_;
    std::vector<Family> up_;
    std::vector<Family> remaining_;
};

/// Largest subset of `universe` (taken as columns on m rows) accepted by `avoids`.
/// `avoids` must be hereditary: closed under deleting columns.
SolveResult hereditary_max(const std::vector<Column>& universe, int m,
                           const std::function<bool(const BitMatrix&)>& avoids, SolveMode mode) {
    SolveResult result;
    result.mode = mode;
    result.value = -1;
    std::vector<Column> chosen;
    std::function<void(std::size_t)> dfs = [&](std::size_t next) {
        ++result.nodes;
        if (static_cast<int>(chosen.size()) > result.value) {
            result.value = static_cast<int>(chosen.size());
            result.witness = BitMatrix(m, chosen);
        }
        for (std::size_t c = next; c < universe.size(); ++c) {
            if (static_cast<int>(chosen.size() + universe.size() - c) <= result.value) {
                return;
            }
            chosen.push_back(universe[c]);
            if (avoids(BitMatrix(m, chosen))) {
                dfs(c + 1);
            }
            chosen.pop_back();
        }
    };
    if (avoids(BitMatrix(m))) {
        dfs(0);
    } else {
        result.value = 0;
        result.witness = BitMatrix(m);
        result.nodes = 1;
    }
    return result;
}

std::vector<Column> all_columns(int m) {
    std::vector<Column> cols;
    for (int s : subsets_by_size(m)) {
        cols.push_back(static_cast<Column>(s));
    }
    return cols;
}

void check_f(const BitMatrix& f) {
    if (f.cols() == 0) {
        throw Error("F has no columns: every matrix with enough rows contains it");
    }
}

}  // namespace

SolveResult solve_bh(const BitMatrix& f, int m, const SolveOptions& options) {
    if (m < 1 || m > kDownsetMaxRows) {
        throw Error("solve_bh: m=" + std::to_string(m) + " outside the downset regime 1.." +
                    std::to_string(kDownsetMaxRows));
    }
    check_f(f);
    if (f.rows() > m) {
        SolveResult r;
        r.value = 1 << m;
        r.witness = BitMatrix(m, all_columns(m));
        return r;
    }
    const BergeKernel kernel(f, m);
    return DownsetSearch(kernel, m).run(options.threads);
}

SolveResult solve_bh_unrestricted(const BitMatrix& f, int m) {
    if (m < 1 || m > kUnrestrictedMaxRows) {
        throw Error("solve_bh_unrestricted: m=" + std::to_string(m) + " outside 1.." +
                    std::to_string(kUnrestrictedMaxRows));
    }
    check_f(f);
    return hereditary_max(
        all_columns(m), m, [&](const BitMatrix& a) { return !berge_contains(f, a).has_value(); },
        SolveMode::Unrestricted);
}

SolveResult solve_forb_family(const std::vector<BitMatrix>& family, int m) {
    if (m < 1 || m > kUnrestrictedMaxRows) {
        throw Error("solve_forb_family: m=" + std::to_string(m) + " outside 1.." +
                    std::to_string(kUnrestrictedMaxRows));
    }
    for (const auto& f : family) {
        check_f(f);
    }
    return hereditary_max(
        all_columns(m), m,
        [&](const BitMatrix& a) {
            return std::none_of(family.begin(), family.end(),
                                [&](const BitMatrix& f) { return config_contains(f, a).has_value(); });
        },
        SolveMode::Unrestricted);
}

SolveResult solve_relative(const BitMatrix& f, const BitMatrix& p) {
    if (p.cols() > kRelativeMaxColumns) {
        throw Error("solve_relative: P has " + std::to_string(p.cols()) + " columns, limit is " +
                    std::to_string(kRelativeMaxColumns));
    }
    check_f(f);
    std::vector<Column> universe(p.columns().begin(), p.columns().end());
    return hereditary_max(
        universe, p.rows(), [&](const BitMatrix& a) { return !berge_contains(f, a).has_value(); },
        SolveMode::Relative);
}

}  // namespace bergekit
