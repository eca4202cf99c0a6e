#include "rsk/partition.hpp"

#include <algorithm>

namespace rsk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ShapeMismatch("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ShapeMismatch("partition parts must be weakly decreasing");
    }
}

int Partition::part(int row) const {
    if (row < 1 || row > rows()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

std::size_t Partition::box_count() const {
    std::size_t n = 0;
    for (int p : parts_) n += static_cast<std::size_t>(p);
    return n;
}

bool Partition::contains(Box b) const {
    return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    out.reserve(box_count());
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
    return out;
}

std::set<Box> Partition::corner_boxes() const {
    std::set<Box> out;
    for (int r = 1; r <= rows(); ++r) {
        Box b{r, part(r)};
        if (!contains({b.row + 1, b.col}) && !contains({b.row, b.col + 1})) out.insert(b);
    }
    return out;
}

std::set<Box> Partition::border_boxes() const {
    std::set<Box> out;
    for (const Box& b : boxes())
        if (!contains({b.row + 1, b.col + 1})) out.insert(b);
    return out;
}

std::set<Box> Partition::hook_cells(Box b) const {
    std::set<Box> out;
    if (!contains(b)) return out;
    for (int c = b.col; c <= part(b.row); ++c) out.insert({b.row, c});
    for (int r = b.row; contains({r, b.col}); ++r) out.insert({r, b.col});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(static_cast<std::size_t>(max_col()));
    for (int c = 1; c <= max_col(); ++c) {
        int count = 0;
        for (int p : parts_)
            if (p >= c) ++count;
        conj.push_back(count);
    }
    return Partition(conj);
}

Partition Partition::with_box(Box b) const {
    if (b.row < 1 || b.row > rows() + 1 || b.col != part(b.row) + 1)
        throw NotCorner("box is not addable to the shape");
    if (b.row > 1 && part(b.row - 1) < b.col)
        throw NotCorner("adding the box would not leave a partition shape");
    std::vector<int> parts = parts_;
    if (b.row == rows() + 1)
        parts.push_back(1);
    else
        parts[static_cast<std::size_t>(b.row - 1)] += 1;
    return Partition(parts);
}

Partition Partition::without_box(Box b) const {
    if (!corner_boxes().contains(b)) throw NotCorner("box is not a corner of the shape");
    std::vector<int> parts = parts_;
    parts[static_cast<std::size_t>(b.row - 1)] -= 1;
    if (parts.back() == 0) parts.pop_back();
    return Partition(parts);
}

namespace {

void extend(const Partition& shape, std::vector<int>& filled, std::vector<Box>& prefix,
            std::size_t total, const std::function<void(const std::vector<Box>&)>& fn) {
    if (prefix.size() == total) {
        fn(prefix);
        return;
    }
    // A box is addable next iff its whole row prefix is already placed and the
    // column above it is placed, i.e. it is the next free cell of its row and
    // the row above is strictly longer so far.
    for (int r = 1; r <= shape.rows(); ++r) {
        int c = filled[static_cast<std::size_t>(r - 1)] + 1;
        if (c > shape.part(r)) continue;
        if (r > 1 && filled[static_cast<std::size_t>(r - 2)] < c) continue;
        filled[static_cast<std::size_t>(r - 1)] = c;
        prefix.push_back({r, c});
        extend(shape, filled, prefix, total, fn);
        prefix.pop_back();
        filled[static_cast<std::size_t>(r - 1)] = c - 1;
    }
}

} // namespace

void Partition::for_each_linear_extension(const std::function<void(const std::vector<Box>&)>& fn,
                                          std::size_t cap) const {
    if (box_count() > cap) throw CapExceeded("too many boxes for linear extension enumeration");
    std::vector<int> filled(static_cast<std::size_t>(rows()), 0);
    std::vector<Box> prefix;
    prefix.reserve(box_count());
    extend(*this, filled, prefix, box_count(), fn);
}

std::vector<std::vector<Box>> Partition::linear_extensions(std::size_t cap) const {
    std::vector<std::vector<Box>> out;
    for_each_linear_extension([&](const std::vector<Box>& ext) { out.push_back(ext); }, cap);
    return out;
}

} // namespace rsk
