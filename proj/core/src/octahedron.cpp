#include "rsk/octahedron.hpp"

#include <algorithm>

namespace rsk {

namespace {

// Base domains: (i,j) such that some box (i+a, j+b) lies in the shape, with
// a,b ranging over 0..2 for U and 0..1 for Ubar/Utilde.
bool base_in_domain(const Partition& sh, int i, int j, int reach) {
    for (int a = 0; a <= reach; ++a)
        for (int b = 0; b <= reach; ++b)
            if (sh.contains({i + a, j + b})) return true;
    return false;
}

int reach_of(PyramidKind kind) { return kind == PyramidKind::U ? 2 : 1; }

int top_level(PyramidKind kind, int i, int j) {
    return kind == PyramidKind::U ? std::min(i, j) + 1 : std::min(i, j);
}

PValue rect_or_zero(const NTableau& t, int i, int j) {
    if (!t.shape().contains({i, j})) return 0;
    return to_signed(t.rect_sum({i, j}));
}

} // namespace

bool PyramidArray::in_domain(int i, int j, int k) const {
    return k >= 0 && k <= top_level(kind_, i, j) && base_in_domain(shape_, i, j, reach_of(kind_));
}

PValue PyramidArray::at(int i, int j, int k) const {
    auto it = entries_.find({i, j, k});
    if (it == entries_.end()) throw DomainMismatch("pyramid entry outside the domain");
    return it->second;
}

void PyramidArray::set(int i, int j, int k, PValue v) { entries_[{i, j, k}] = v; }

PyramidArray build_u(const NTableau& t) {
    const Partition& sh = t.shape();
    PyramidArray u(PyramidKind::U, sh);
    const int max_k = std::min(sh.rows(), sh.max_col()) + 1;
    for (int k = 0; k <= max_k; ++k) {
        for (int i = -1; i <= sh.rows(); ++i) {
            for (int j = -1; j <= sh.max_col(); ++j) {
                if (!base_in_domain(sh, i, j, 2)) continue;
                const int top = std::min(i, j) + 1;
                if (k > top) continue;
                PValue v = 0;
                if (k > 0 && k < top) {
                    // Interior levels exist only over boxes of the shape.
                    PValue floor_pair = std::min(u.at(i - 1, j, k - 1), u.at(i, j - 1, k - 1));
                    PValue level_pair = std::max(u.at(i - 1, j, k), u.at(i, j - 1, k));
                    v = checked_sub(checked_add(floor_pair, level_pair), u.at(i - 1, j - 1, k - 1));
                    if (k == 1) v = checked_add(v, to_signed(t.at({i, j})));
                }
                u.set(i, j, k, v);
            }
        }
    }
    return u;
}

PyramidArray build_ubar(const PyramidArray& u) {
    if (u.kind() != PyramidKind::U) throw KindMismatch("prefix sums need a U array");
    const Partition& sh = u.shape();
    PyramidArray ubar(PyramidKind::Ubar, sh);
    for (int i = 0; i <= sh.rows(); ++i) {
        for (int j = 0; j <= sh.max_col(); ++j) {
            if (!base_in_domain(sh, i, j, 1)) continue;
            PValue acc = 0;
            for (int k = 0; k <= std::min(i, j); ++k) {
                acc = checked_add(acc, u.at(i, j, k));
                ubar.set(i, j, k, acc);
            }
        }
    }
    return ubar;
}

PyramidArray build_utilde(const PyramidArray& ubar, const NTableau& t) {
    if (ubar.kind() != PyramidKind::Ubar) throw KindMismatch("normalisation needs a Ubar array");
    if (ubar.shape() != t.shape()) throw ShapeMismatch("array and tableau shapes differ");
    PyramidArray ut(PyramidKind::Utilde, t.shape());
    for (const auto& [key, v] : ubar.entries()) {
        auto [i, j, k] = key;
        ut.set(i, j, k, checked_sub(v, rect_or_zero(t, i, j)));
    }
    return ut;
}

static void check_impl(const PyramidArray& ut, const NTableau* t,
                       std::vector<OctahedronViolation>& out) {
    const Partition& sh = ut.shape();
    for (int i = 0; i <= sh.rows(); ++i) {
        for (int j = 0; j <= sh.max_col(); ++j) {
            if (!base_in_domain(sh, i, j, 1)) continue;
            const int m = std::min(i, j);
            if (t) {
                PValue want = checked_sub(PValue{0}, rect_or_zero(*t, i, j));
                if (ut.at(i, j, 0) != want)
                    out.push_back({i, j, 0, want, ut.at(i, j, 0), "floor"});
            }
            if (ut.at(i, j, m) != 0)
                out.push_back({i, j, m, 0, ut.at(i, j, m), "ceiling"});
            for (int k = 1; k < m; ++k) {
                PValue want = checked_sub(
                    std::max(checked_add(ut.at(i - 1, j, k), ut.at(i, j - 1, k - 1)),
                             checked_add(ut.at(i - 1, j, k - 1), ut.at(i, j - 1, k))),
                    ut.at(i - 1, j - 1, k - 1));
                if (ut.at(i, j, k) != want)
                    out.push_back({i, j, k, want, ut.at(i, j, k), "recurrence"});
            }
        }
    }
}

std::vector<OctahedronViolation> check_octahedron(const PyramidArray& utilde) {
    if (utilde.kind() != PyramidKind::Utilde) throw KindMismatch("check needs a Utilde array");
    std::vector<OctahedronViolation> out;
    check_impl(utilde, nullptr, out);
    return out;
}

std::vector<OctahedronViolation> check_octahedron(const PyramidArray& utilde, const NTableau& t) {
    if (utilde.kind() != PyramidKind::Utilde) throw KindMismatch("check needs a Utilde array");
    if (utilde.shape() != t.shape()) throw ShapeMismatch("array and tableau shapes differ");
    std::vector<OctahedronViolation> out;
    check_impl(utilde, &t, out);
    return out;
}

NTableau extract_rpp(const PyramidArray& u, const Partition& shape) {
    if (u.kind() != PyramidKind::U) throw KindMismatch("extraction needs a U array");
    if (u.shape() != shape) throw DomainMismatch("array was built from a different shape");
    std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
        rows[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(shape.part(r)));
    for (const Box& b : shape.boxes()) {
        int m = 0;
        while (shape.contains({b.row + m + 1, b.col + m + 1})) ++m;
        rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] =
            to_entry(u.at(b.row + m, b.col + m, m + 1));
    }
    return NTableau(shape, std::move(rows));
}

} // namespace rsk
