#include "rsk/classical_rsk.hpp"

#include <algorithm>

namespace rsk {

GtPattern::GtPattern(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {
    const int n = static_cast<int>(rows_.size());
    for (int i = 1; i <= n; ++i)
        if (static_cast<int>(rows_[static_cast<std::size_t>(i - 1)].size()) != n + 1 - i)
            throw SizeMismatch("row i of a pattern of size n must have n+1-i entries");
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) {
            if (g(i, j) < g(i + 1, j + 1))
                throw EntryOutOfRange("pattern violates g(i,j) >= g(i+1,j+1)");
            if (g(i + 1, j + 1) < g(i, j + 1))
                throw EntryOutOfRange("pattern violates g(i+1,j+1) >= g(i,j+1)");
        }
}

Entry GtPattern::g(int i, int j) const {
    if (i < 1 || j < i || j > size()) throw EntryOutOfRange("pattern index out of range");
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i)];
}

static int square_side(const NTableau& a) {
    const Partition& sh = a.shape();
    const int n = sh.rows();
    for (int r = 1; r <= n; ++r)
        if (sh.part(r) != n) throw NotSquare("matrix input must be square");
    return n;
}

std::vector<BiwordPair> matrix_to_biword(const NTableau& a) {
    const int n = square_side(a);
    std::vector<BiwordPair> word;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (Entry m = 0; m < a.at({i, j}); ++m) word.push_back({i, j});
    return word;
}

std::pair<SsytView, SsytView> rsk_insert(const NTableau& a) {
    const int n = square_side(a);
    std::vector<std::vector<Entry>> p, q;
    for (const BiwordPair& pair : matrix_to_biword(a)) {
        Entry v = static_cast<Entry>(pair.bottom);
        std::size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.push_back({v});
                q.push_back({static_cast<Entry>(pair.top)});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), v);
            if (it == p[r].end()) {
                p[r].push_back(v);
                q[r].push_back(static_cast<Entry>(pair.top));
                break;
            }
            std::swap(*it, v);
        }
    }
    return {SsytView(NTableau::from_rows(std::move(p)), n),
            SsytView(NTableau::from_rows(std::move(q)), n)};
}

GtPattern gt_pattern(const NTableau& t, int n) {
    if (n < 0) throw EntryOutOfRange("pattern size must be nonnegative");
    for (const Box& b : t.shape().boxes())
        if (t.at(b) < 1 || t.at(b) > static_cast<Entry>(n))
            throw EntryOutOfRange("tableau entries must lie in 1..n");
    std::vector<std::vector<Entry>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<Entry> row;
        row.reserve(static_cast<std::size_t>(n + 1 - i));
        const Entry bound = static_cast<Entry>(n + 1 - i);
        for (int j = i; j <= n; ++j) {
            const int r = j - i + 1;
            Entry count = 0;
            if (r <= t.shape().rows())
                for (Entry v : t.rows()[static_cast<std::size_t>(r - 1)])
                    if (v <= bound) ++count;
            row.push_back(count);
        }
        rows.push_back(std::move(row));
    }
    return GtPattern(std::move(rows));
}

GtPattern gt_pattern(const SsytView& t) { return gt_pattern(t.tableau(), t.max_entry()); }

NTableau glue(const GtPattern& gp, const GtPattern& gq) {
    const int n = gp.size();
    if (gq.size() != n) throw SizeMismatch("patterns must have equal size");
    for (int j = 1; j <= n; ++j)
        if (gp.g(1, j) != gq.g(1, j))
            throw FirstRowMismatch("patterns must agree on the first row");
    std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n),
                                         std::vector<Entry>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                i >= j ? gp.g(i - j + 1, n + 1 - j) : gq.g(j - i + 1, n + 1 - i);
    return NTableau::from_rows(std::move(rows));
}

NTableau classical_hat(const NTableau& a) {
    auto [p, q] = rsk_insert(a);
    return glue(gt_pattern(p), gt_pattern(q));
}

} // namespace rsk
