#include <bergekit/transform.hpp>

#include <unordered_set>

namespace bergekit {

bool is_downset(const BitMatrix& a) {
    if (!is_simple(a)) {
        return false;
    }
    const std::unordered_set<Column> present(a.columns().begin(), a.columns().end());
    for (Column c : a.columns()) {
        for (Column bits = c; bits; bits &= bits - 1) {
            const Column below = c & ~(bits & -bits);
            if (!present.contains(below)) {
                return false;
            }
        }
    }
    return true;
}

Downset::Downset(BitMatrix members) : members_(std::move(members)) {
    if (!is_downset(members_)) {
        throw Error("column family is not a simple downset");
    }
}

BitMatrix shift_row(const BitMatrix& a, int row) {
    if (row < 0 || row >= a.rows()) {
        throw Error("shift_row: row " + std::to_string(row) + " out of range");
    }
    if (!is_simple(a)) {
        throw Error("shift_row: input is not simple");
    }
    std::unordered_set<Column> present(a.columns().begin(), a.columns().end());
    std::vector<Column> out(a.columns().begin(), a.columns().end());
    const Column bit = row_bit(row);
    for (Column& c : out) {
        if (!(c & bit)) {
            continue;
        }
        const Column shifted = c & ~bit;
        if (!present.contains(shifted)) {
            present.insert(shifted);
            c = shifted;
        }
    }
    return BitMatrix(a.rows(), std::move(out));
}

Downset shift_fixpoint(const BitMatrix& a) {
    if (!is_simple(a)) {
        throw Error("shift_fixpoint: input is not simple");
    }
    BitMatrix cur = a;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < cur.rows(); ++r) {
            BitMatrix next = shift_row(cur, r);
            if (!(next == cur)) {
                changed = true;
                cur = std::move(next);
            }
        }
    }
    return Downset(std::move(cur));
}

BitMatrix prune_support_columns(const BitMatrix& a, const std::vector<Column>& supports, int c) {
    const Column mask = low_rows(a.rows());
    for (Column s : supports) {
        if (s & ~mask) {
            throw Error("prune_support_columns: support outside the row range");
        }
    }
    std::vector<Column> cols(a.columns().begin(), a.columns().end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (Column s : supports) {
            int count = 0;
            for (Column col : cols) {
                count += is_subset(s, col) ? 1 : 0;
            }
            if (count >= 1 && count <= c) {
                std::erase_if(cols, [s](Column col) { return is_subset(s, col); });
                changed = true;
            }
        }
    }
    return BitMatrix(a.rows(), std::move(cols));
}

}  // namespace bergekit
