#pragma once

#include <utility>
#include <vector>

#include "rsk/tableau.hpp"

namespace rsk {

// One insertion step: add corner box b with input value x to the reverse
// plane partition image, toggling the interior of the diagonal through b.
// The receiving tableau must be an RPP and b must be addable as a corner.
NTableau insert_corner(const NTableau& image, Box b, Entry x);

// Inverse of insert_corner at a corner box: returns the shrunk image and the
// input value that was inserted there.
std::pair<NTableau, Entry> remove_corner(const NTableau& image, Box b);

// Box-by-box insertion of every entry of t, in row-major order.
NTableau toggle_rsk(const NTableau& t);
// Same, along a caller-supplied linear extension of the shape's box order.
// The result does not depend on the extension chosen.
NTableau toggle_rsk(const NTableau& t, const std::vector<Box>& order);

// Full inverse: recover the unique input tableau from an RPP image.
NTableau toggle_rsk_inverse(const NTableau& image);

} // namespace rsk
