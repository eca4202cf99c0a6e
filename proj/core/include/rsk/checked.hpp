#pragma once

#include <cstdint>
#include <limits>

#include "rsk/errors.hpp"

namespace rsk {

// Tableau entries are nonnegative; pyramid values can go negative.
// All arithmetic on them is checked: wraparound is a bug, not a feature.
using Entry = std::uint64_t;
using PValue = std::int64_t;

inline Entry checked_add(Entry a, Entry b) {
    Entry r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("entry addition overflow");
    return r;
}

inline Entry checked_sub(Entry a, Entry b) {
    if (b > a) throw ArithmeticOverflow("entry subtraction underflow");
    return a - b;
}

inline PValue checked_add(PValue a, PValue b) {
    PValue r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("signed addition overflow");
    return r;
}

inline PValue checked_sub(PValue a, PValue b) {
    PValue r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("signed subtraction overflow");
    return r;
}

inline PValue to_signed(Entry v) {
    if (v > static_cast<Entry>(std::numeric_limits<PValue>::max()))
        throw ArithmeticOverflow("entry does not fit in signed value");
    return static_cast<PValue>(v);
}

inline Entry to_entry(PValue v) {
    if (v < 0) throw ArithmeticOverflow("negative value is not a tableau entry");
    return static_cast<Entry>(v);
}

} // namespace rsk
