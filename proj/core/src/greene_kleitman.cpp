#include "rsk/greene_kleitman.hpp"

#include <algorithm>
#include <set>

#include "rsk/octahedron.hpp"

namespace rsk {

LatticePath::LatticePath(std::vector<Box> boxes, const Partition& shape)
    : boxes_(std::move(boxes)) {
    if (boxes_.empty()) throw PathOutOfShape("path must contain at least one box");
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
        if (!shape.contains(boxes_[i])) throw PathOutOfShape("path leaves the shape");
        if (i > 0) {
            Box prev = boxes_[i - 1], cur = boxes_[i];
            bool down = cur.row == prev.row + 1 && cur.col == prev.col;
            bool right = cur.row == prev.row && cur.col == prev.col + 1;
            if (!down && !right) throw PathOutOfShape("path steps must go down or right");
        }
    }
}

Entry path_weight(const NTableau& t, const LatticePath& p) {
    Entry sum = 0;
    for (const Box& b : p.boxes()) sum = checked_add(sum, t.at(b));
    return sum;
}

namespace {

struct FamilySearch {
    const Partition& shape;
    const std::vector<Box>& from;
    const std::vector<Box>& to;
    const std::function<void(const PathFamily&)>& fn;
    std::set<Box> used;
    std::vector<LatticePath> picked;

    void run(std::size_t l) {
        if (l == from.size()) {
            fn(PathFamily{picked});
            return;
        }
        std::vector<Box> path{from[l]};
        if (used.contains(from[l])) return;
        used.insert(from[l]);
        walk(l, path);
        used.erase(from[l]);
    }

    void walk(std::size_t l, std::vector<Box>& path) {
        Box cur = path.back();
        if (cur == to[l]) {
            picked.emplace_back(path, shape);
            run(l + 1);
            picked.pop_back();
            return;
        }
        for (Box next : {Box{cur.row + 1, cur.col}, Box{cur.row, cur.col + 1}}) {
            if (next.row > to[l].row || next.col > to[l].col) continue;
            if (!shape.contains(next) || used.contains(next)) continue;
            used.insert(next);
            path.push_back(next);
            walk(l, path);
            path.pop_back();
            used.erase(next);
        }
    }
};

} // namespace

void for_each_ncpath_family(const Partition& shape, const std::vector<Box>& from,
                            const std::vector<Box>& to,
                            const std::function<void(const PathFamily&)>& fn, std::size_t cap) {
    if (from.size() != to.size())
        throw EndpointOutOfShape("start and end lists must have equal length");
    if (shape.box_count() > cap)
        throw CapExceeded("too many boxes for path family enumeration");
    for (const Box& b : from)
        if (!shape.contains(b)) throw EndpointOutOfShape("path start outside the shape");
    for (const Box& b : to)
        if (!shape.contains(b)) throw EndpointOutOfShape("path end outside the shape");
    FamilySearch search{shape, from, to, fn, {}, {}};
    search.run(0);
}

std::vector<PathFamily> enumerate_ncpath(const Partition& shape, const std::vector<Box>& from,
                                         const std::vector<Box>& to, std::size_t cap) {
    std::vector<PathFamily> out;
    for_each_ncpath_family(shape, from, to, [&](const PathFamily& f) { out.push_back(f); }, cap);
    return out;
}

Entry gk_value(const NTableau& t, Box b, int k, std::size_t cap) {
    if (k < 1 || k > std::min(b.row, b.col))
        throw EndpointOutOfShape("path count must lie in 1..min(row, col)");
    std::vector<Box> from, to;
    for (int l = 1; l <= k; ++l) {
        from.push_back({1, l});
        to.push_back({b.row, b.col - k + l});
    }
    bool found = false;
    Entry best = 0;
    for_each_ncpath_family(
        t.shape(), from, to,
        [&](const PathFamily& family) {
            Entry total = 0;
            for (const LatticePath& p : family.paths) total = checked_add(total, path_weight(t, p));
            if (!found || total > best) best = total;
            found = true;
        },
        cap);
    if (!found) throw NoFamily("no disjoint path family joins the given endpoints");
    return best;
}

std::vector<GkViolation> verify_gk(const NTableau& t, std::size_t cap) {
    PyramidArray ubar = build_ubar(build_u(t));
    std::vector<GkViolation> out;
    for (const Box& b : t.shape().boxes()) {
        for (int k = 1; k <= std::min(b.row, b.col); ++k) {
            Entry best = gk_value(t, b, k, cap);
            PValue expect = ubar.at(b.row, b.col, k);
            if (to_signed(best) != expect) out.push_back({b.row, b.col, k, best, expect});
        }
    }
    return out;
}

} // namespace rsk
