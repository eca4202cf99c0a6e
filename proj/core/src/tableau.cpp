#include "rsk/tableau.hpp"

#include <algorithm>

namespace rsk {

NTableau::NTableau(Partition shape, std::vector<std::vector<Entry>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw ShapeMismatch("row count does not match shape");
    for (int r = 1; r <= shape_.rows(); ++r)
        if (static_cast<int>(rows_[static_cast<std::size_t>(r - 1)].size()) != shape_.part(r))
            throw ShapeMismatch("row length does not match shape");
}

NTableau NTableau::from_rows(std::vector<std::vector<Entry>> rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return NTableau(Partition(parts), std::move(rows));
}

Entry NTableau::at(Box b) const {
    if (!shape_.contains(b)) throw BoxOutOfShape("box outside the shape");
    return rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)];
}

Entry NTableau::at_or_zero(Box b) const {
    if (!shape_.contains(b)) return 0;
    return rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)];
}

bool NTableau::is_rpp() const {
    for (const Box& b : shape_.boxes()) {
        Entry v = at(b);
        if (b.col > 1 && at({b.row, b.col - 1}) > v) return false;
        if (b.row > 1 && shape_.contains({b.row - 1, b.col}) && at({b.row - 1, b.col}) > v)
            return false;
    }
    return true;
}

std::vector<Entry> NTableau::row_sums() const {
    std::vector<Entry> out(static_cast<std::size_t>(shape_.rows()), 0);
    for (int r = 1; r <= shape_.rows(); ++r)
        for (int c = 1; c <= shape_.part(r); ++c)
            out[static_cast<std::size_t>(r - 1)] =
                checked_add(out[static_cast<std::size_t>(r - 1)], at({r, c}));
    return out;
}

std::vector<Entry> NTableau::col_sums() const {
    std::vector<Entry> out(static_cast<std::size_t>(shape_.max_col()), 0);
    for (int r = 1; r <= shape_.rows(); ++r)
        for (int c = 1; c <= shape_.part(r); ++c)
            out[static_cast<std::size_t>(c - 1)] =
                checked_add(out[static_cast<std::size_t>(c - 1)], at({r, c}));
    return out;
}

Entry NTableau::diag_sum(Box b) const {
    if (!shape_.contains(b)) throw BoxOutOfShape("diagonal anchor outside the shape");
    Entry sum = 0;
    for (int k = 0; k < std::min(b.row, b.col); ++k)
        sum = checked_add(sum, at({b.row - k, b.col - k}));
    return sum;
}

Entry NTableau::rect_sum(Box b) const {
    if (!shape_.contains(b))
        throw RectangleNotInShape("rectangle corner outside the shape");
    Entry sum = 0;
    for (int r = 1; r <= b.row; ++r)
        for (int c = 1; c <= b.col; ++c) sum = checked_add(sum, at({r, c}));
    return sum;
}

Entry NTableau::total() const {
    Entry sum = 0;
    for (const auto& row : rows_)
        for (Entry v : row) sum = checked_add(sum, v);
    return sum;
}

NTableau NTableau::transposed() const {
    Partition conj = shape_.conjugate();
    std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(conj.rows()));
    for (int r = 1; r <= conj.rows(); ++r) {
        auto& row = rows[static_cast<std::size_t>(r - 1)];
        row.reserve(static_cast<std::size_t>(conj.part(r)));
        for (int c = 1; c <= conj.part(r); ++c) row.push_back(at({c, r}));
    }
    return NTableau(conj, std::move(rows));
}

SsytView::SsytView(NTableau t, int max_entry) : t_(std::move(t)), max_entry_(max_entry) {
    if (max_entry_ < 0) throw EntryOutOfRange("entry bound must be nonnegative");
    for (const Box& b : t_.shape().boxes()) {
        Entry v = t_.at(b);
        if (v < 1 || v > static_cast<Entry>(max_entry_))
            throw EntryOutOfRange("semistandard entries must lie in 1..max_entry");
        if (b.col > 1 && t_.at({b.row, b.col - 1}) > v)
            throw EntryOutOfRange("semistandard rows must weakly increase");
        if (b.row > 1 && t_.shape().contains({b.row - 1, b.col}) &&
            t_.at({b.row - 1, b.col}) >= v)
            throw EntryOutOfRange("semistandard columns must strictly increase");
    }
}

std::vector<Entry> SsytView::type_vector() const {
    std::vector<Entry> out(static_cast<std::size_t>(max_entry_), 0);
    for (const Box& b : t_.shape().boxes()) {
        Entry v = t_.at(b);
        out[static_cast<std::size_t>(v - 1)] = checked_add(out[static_cast<std::size_t>(v - 1)], 1);
    }
    return out;
}

} // namespace rsk
