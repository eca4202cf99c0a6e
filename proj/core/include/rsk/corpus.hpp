#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rsk/tableau.hpp"

namespace rsk {

// Seeded generator with explicit bounded sampling so identical seeds give
// identical corpora on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n) by rejection; n >= 1.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi], inclusive.
    int range(int lo, int hi);

private:
    std::mt19937_64 eng_;
};

std::vector<Partition> partitions_of(std::size_t n);
// All partitions with at most max_boxes boxes, the empty one included.
std::vector<Partition> partitions_up_to(std::size_t max_boxes);

Partition random_partition(Rng& rng, std::size_t max_boxes);
// Shape uniform over partitions with at most max_boxes boxes, entries
// independent uniform in 0..max_entry.
NTableau random_tableau(Rng& rng, std::size_t max_boxes, Entry max_entry = 3);
NTableau random_square(Rng& rng, int n, Entry max_entry = 3);
NTableau random_filling(Rng& rng, const Partition& shape, Entry max_entry = 3);

// Random linear extension by repeatedly picking one of the currently
// addable boxes.
std::vector<Box> random_linear_extension(Rng& rng, const Partition& shape);

// Every filling of the shape with entries in 0..max_entry.
void for_each_filling(const Partition& shape, Entry max_entry,
                      const std::function<void(const NTableau&)>& fn);

} // namespace rsk
