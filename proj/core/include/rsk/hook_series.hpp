#pragma once

#include "rsk/series.hpp"
#include "rsk/tableau.hpp"

namespace rsk {

inline constexpr std::size_t kDefaultDegreeCap = 4096;
inline constexpr std::size_t kDefaultBruteDegreeCap = 64;

// Number of boxes in the hook of b; 0 outside the shape.
std::size_t hook_length(const Partition& shape, Box b);

// Sum of the content weights over the hook of b.
Rational x_hook_length(const Partition& shape, Box b, const ContentWeights& w);

// Sum of entry * weight(content) over all boxes.
Rational weighted_weight(const NTableau& t, const ContentWeights& w);

// Weighted size of the insertion image of t equals the sum of entries of t
// scaled by their weighted hook lengths.
bool check_weight_formula(const NTableau& t, const ContentWeights& w);

// Generating function of reverse plane partitions by size: the product of
// geometric series over hook lengths, and an independent brute-force count.
TruncatedSeries rpp_gf(const Partition& shape, std::size_t degree,
                       std::size_t degree_cap = kDefaultDegreeCap);
TruncatedSeries rpp_gf_brute(const Partition& shape, std::size_t degree,
                             std::size_t degree_cap = kDefaultBruteDegreeCap);

// Same comparison after specialising the content variables to integer powers:
// weights must be positive integers.
bool weighted_rpp_gf_check(const Partition& shape, const ContentWeights& w, std::size_t degree,
                           std::size_t degree_cap = kDefaultBruteDegreeCap);

// Standard Young tableaux of the shape, entries 1..n.
std::vector<NTableau> syt_enumerate(const Partition& shape,
                                    std::size_t cap = kDefaultExtensionCap);

// Product over k of 1 / (sum of weights of the contents of the k largest
// entries' boxes).
Rational t_x_value(const NTableau& syt, const ContentWeights& w);

// Sum of t_x_value over all standard tableaux of the shape equals the
// product of reciprocals of weighted hook lengths.
bool check_whlf(const Partition& shape, const ContentWeights& w,
                std::size_t cap = kDefaultExtensionCap);

} // namespace rsk
