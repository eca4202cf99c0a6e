#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rsk/tableau.hpp"

namespace rsk {

inline constexpr std::size_t kDefaultNcPathCap = 20;

// Monotone lattice path inside a shape: consecutive boxes differ by a single
// step down or right, and every box lies in the shape.
class LatticePath {
public:
    LatticePath(std::vector<Box> boxes, const Partition& shape);

    const std::vector<Box>& boxes() const { return boxes_; }
    Box start() const { return boxes_.front(); }
    Box finish() const { return boxes_.back(); }

    bool operator==(const LatticePath&) const = default;

private:
    std::vector<Box> boxes_;
};

// Pairwise box-disjoint collection; path l runs from X[l] to Y[l].
struct PathFamily {
    std::vector<LatticePath> paths;
};

Entry path_weight(const NTableau& t, const LatticePath& p);

// Enumerates every box-disjoint family with the given pinned endpoints,
// exactly once. Guarded by a box-count cap on the shape.
void for_each_ncpath_family(const Partition& shape, const std::vector<Box>& from,
                            const std::vector<Box>& to,
                            const std::function<void(const PathFamily&)>& fn,
                            std::size_t cap = kDefaultNcPathCap);
std::vector<PathFamily> enumerate_ncpath(const Partition& shape, const std::vector<Box>& from,
                                         const std::vector<Box>& to,
                                         std::size_t cap = kDefaultNcPathCap);

// Maximum total weight of k disjoint paths from the top-row boxes (1,1)..(1,k)
// to the k boxes ending at b in its row. Requires 1 <= k <= min(row, col).
Entry gk_value(const NTableau& t, Box b, int k, std::size_t cap = kDefaultNcPathCap);

struct GkViolation {
    int i = 0, j = 0, k = 0;
    Entry best = 0;   // maximum disjoint-path weight
    PValue ubar = 0;  // prefix-sum pyramid value it must match
    bool operator==(const GkViolation&) const = default;
};

// Compares gk_value against the Ubar pyramid at every box and depth.
std::vector<GkViolation> verify_gk(const NTableau& t, std::size_t cap = kDefaultNcPathCap);

} // namespace rsk
