#include "rsk/toggle_rsk.hpp"

#include <algorithm>
#include <map>

namespace rsk {

namespace {

Entry cell(const std::vector<std::vector<Entry>>& rows, int r, int c) {
    if (r < 1 || c < 1 || r > static_cast<int>(rows.size())) return 0;
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    if (c > static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(c - 1)];
}

// Toggle the interior cells of the diagonal through (i,j). Each step k
// rewrites the cell (i-k, j-k) from its four diagonal neighbours:
//   new = max(up-left pair one step further out) + min(adjacent pair) - old.
// The same map undoes itself, so insertion and removal share it.
void toggle_diagonal(std::vector<std::vector<Entry>>& rows, int i, int j) {
    for (int k = 1; k < std::min(i, j); ++k) {
        Entry outer = std::max(cell(rows, i - k - 1, j - k), cell(rows, i - k, j - k - 1));
        Entry inner = std::min(cell(rows, i - k, j - k + 1), cell(rows, i - k + 1, j - k));
        rows[static_cast<std::size_t>(i - k - 1)][static_cast<std::size_t>(j - k - 1)] =
            checked_sub(checked_add(outer, inner), cell(rows, i - k, j - k));
    }
}

// Unvalidated insertion into ragged storage; callers guarantee the shape
// stays a partition and the storage holds an RPP.
void insert_unchecked(std::vector<std::vector<Entry>>& rows, Box b, Entry x) {
    toggle_diagonal(rows, b.row, b.col);
    Entry value = checked_add(std::max(cell(rows, b.row - 1, b.col), cell(rows, b.row, b.col - 1)), x);
    if (b.row == static_cast<int>(rows.size()) + 1) rows.emplace_back();
    rows[static_cast<std::size_t>(b.row - 1)].push_back(value);
}

Entry remove_unchecked(std::vector<std::vector<Entry>>& rows, Box b) {
    Entry top = rows[static_cast<std::size_t>(b.row - 1)].back();
    Entry x = checked_sub(top, std::max(cell(rows, b.row - 1, b.col), cell(rows, b.row, b.col - 1)));
    rows[static_cast<std::size_t>(b.row - 1)].pop_back();
    if (rows.back().empty()) rows.pop_back();
    toggle_diagonal(rows, b.row, b.col);
    return x;
}

} // namespace

NTableau insert_corner(const NTableau& image, Box b, Entry x) {
    if (!image.is_rpp()) throw NotRpp("insertion image must be a reverse plane partition");
    Partition grown = image.shape().with_box(b); // NotCorner when not addable
    std::vector<std::vector<Entry>> rows = image.rows();
    insert_unchecked(rows, b, x);
    return NTableau(std::move(grown), std::move(rows));
}

std::pair<NTableau, Entry> remove_corner(const NTableau& image, Box b) {
    if (!image.is_rpp()) throw NotRpp("removal image must be a reverse plane partition");
    Partition shrunk = image.shape().without_box(b); // NotCorner when not a corner
    std::vector<std::vector<Entry>> rows = image.rows();
    Entry x = remove_unchecked(rows, b);
    return {NTableau(std::move(shrunk), std::move(rows)), x};
}

NTableau toggle_rsk(const NTableau& t) { return toggle_rsk(t, t.shape().boxes()); }

NTableau toggle_rsk(const NTableau& t, const std::vector<Box>& order) {
    const Partition& sh = t.shape();
    if (order.size() != sh.box_count())
        throw NotLinearExtension("order must list every box exactly once");
    std::map<Box, std::size_t> position;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        if (!sh.contains(order[idx]))
            throw NotLinearExtension("order contains a box outside the shape");
        if (!position.emplace(order[idx], idx).second)
            throw NotLinearExtension("order repeats a box");
    }
    for (const auto& [b, idx] : position) {
        Box up{b.row - 1, b.col}, left{b.row, b.col - 1};
        if (sh.contains(up) && position.at(up) > idx)
            throw NotLinearExtension("box precedes its upper neighbour");
        if (sh.contains(left) && position.at(left) > idx)
            throw NotLinearExtension("box precedes its left neighbour");
    }
    std::vector<std::vector<Entry>> rows;
    for (const Box& b : order) insert_unchecked(rows, b, t.at(b));
    return NTableau::from_rows(std::move(rows));
}

NTableau toggle_rsk_inverse(const NTableau& image) {
    if (!image.is_rpp()) throw NotRpp("inverse input must be a reverse plane partition");
    std::vector<std::vector<Entry>> rows = image.rows();
    std::vector<std::vector<Entry>> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        out[r].resize(rows[r].size());
    // Peel boxes in reverse row-major order; each is a corner when removed.
    for (int r = static_cast<int>(rows.size()); r >= 1; --r)
        for (int c = static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()); c >= 1; --c)
            out[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] =
                remove_unchecked(rows, {r, c});
    return NTableau::from_rows(std::move(out));
}

} // namespace rsk
