#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "rsk/errors.hpp"

namespace rsk {

// 1-based matrix coordinates: row grows downward, column to the right.
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

// content(b) = col - row, constant on diagonals.
inline int content(Box b) { return b.col - b.row; }

inline constexpr std::size_t kDefaultExtensionCap = 12;

// Integer partition viewed as a Young diagram in English notation.
// parts are weakly decreasing positive integers; the empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    // part(r) == 0 for rows past the last one, so callers can probe freely.
    int part(int row) const;
    int max_col() const { return parts_.empty() ? 0 : parts_.front(); }
    std::size_t box_count() const;
    bool empty() const { return parts_.empty(); }

    const std::vector<int>& parts() const { return parts_; }

    bool contains(Box b) const;
    // Row-major listing of all boxes.
    std::vector<Box> boxes() const;

    // Corner boxes: both the box below and the box to the right are absent.
    std::set<Box> corner_boxes() const;
    // Border boxes: the box diagonally below-right is absent.
    std::set<Box> border_boxes() const;
    // Hook of b: b itself plus everything directly below or directly right of it.
    std::set<Box> hook_cells(Box b) const;

    Partition conjugate() const;

    // Partition that results from adding box b; throws NotCorner unless b is
    // addable (the enlarged diagram is again a partition with b as a corner).
    Partition with_box(Box b) const;
    // Inverse of with_box; throws NotCorner unless b is a corner box.
    Partition without_box(Box b) const;

    // All linear extensions of the box order (u appears before anything weakly
    // below-right of it). Guarded by a box-count cap since the count explodes.
    void for_each_linear_extension(const std::function<void(const std::vector<Box>&)>& fn,
                                   std::size_t cap = kDefaultExtensionCap) const;
    std::vector<std::vector<Box>> linear_extensions(std::size_t cap = kDefaultExtensionCap) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

} // namespace rsk
