#include "rsk/corpus.hpp"

namespace rsk {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error("empty sampling range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % n;
}

int Rng::range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

void descend(std::size_t remaining, int max_part, std::vector<int>& parts,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(parts));
        return;
    }
    for (int p = std::min<int>(max_part, static_cast<int>(remaining)); p >= 1; --p) {
        parts.push_back(p);
        descend(remaining - static_cast<std::size_t>(p), p, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    descend(n, n == 0 ? 1 : static_cast<int>(n), parts, out);
    return out;
}

std::vector<Partition> partitions_up_to(std::size_t max_boxes) {
    std::vector<Partition> out;
    for (std::size_t n = 0; n <= max_boxes; ++n)
        for (Partition& p : partitions_of(n)) out.push_back(std::move(p));
    return out;
}

Partition random_partition(Rng& rng, std::size_t max_boxes) {
    std::vector<Partition> pool = partitions_up_to(max_boxes);
    return pool[static_cast<std::size_t>(rng.below(pool.size()))];
}

NTableau random_filling(Rng& rng, const Partition& shape, Entry max_entry) {
    std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r) {
        auto& row = rows[static_cast<std::size_t>(r - 1)];
        row.reserve(static_cast<std::size_t>(shape.part(r)));
        for (int c = 1; c <= shape.part(r); ++c)
            row.push_back(static_cast<Entry>(rng.below(max_entry + 1)));
    }
    return NTableau(shape, std::move(rows));
}

NTableau random_tableau(Rng& rng, std::size_t max_boxes, Entry max_entry) {
    return random_filling(rng, random_partition(rng, max_boxes), max_entry);
}

NTableau random_square(Rng& rng, int n, Entry max_entry) {
    return random_filling(rng, Partition(std::vector<int>(static_cast<std::size_t>(n), n)),
                          max_entry);
}

std::vector<Box> random_linear_extension(Rng& rng, const Partition& shape) {
    std::vector<int> filled(static_cast<std::size_t>(shape.rows()), 0);
    std::vector<Box> out;
    out.reserve(shape.box_count());
    while (out.size() < shape.box_count()) {
        std::vector<Box> addable;
        for (int r = 1; r <= shape.rows(); ++r) {
            int c = filled[static_cast<std::size_t>(r - 1)] + 1;
            if (c > shape.part(r)) continue;
            if (r > 1 && filled[static_cast<std::size_t>(r - 2)] < c) continue;
            addable.push_back({r, c});
        }
        Box pick = addable[static_cast<std::size_t>(rng.below(addable.size()))];
        filled[static_cast<std::size_t>(pick.row - 1)] = pick.col;
        out.push_back(pick);
    }
    return out;
}

void for_each_filling(const Partition& shape, Entry max_entry,
                      const std::function<void(const NTableau&)>& fn) {
    const std::size_t n = shape.box_count();
    std::vector<Box> boxes = shape.boxes();
    std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
        rows[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(shape.part(r)));
    std::vector<Entry> digits(n, 0);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(boxes[i].row - 1)]
                [static_cast<std::size_t>(boxes[i].col - 1)] = digits[i];
        fn(NTableau(shape, rows));
        std::size_t pos = 0;
        while (pos < n && digits[pos] == max_entry) digits[pos++] = 0;
        if (pos == n) break;
        ++digits[pos];
    }
}

} // namespace rsk
