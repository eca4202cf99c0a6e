#include "rsk/hook_series.hpp"

#include <algorithm>

#include "rsk/toggle_rsk.hpp"

namespace rsk {

std::size_t hook_length(const Partition& shape, Box b) {
    if (!shape.contains(b)) return 0;
    std::size_t arm = static_cast<std::size_t>(shape.part(b.row) - b.col);
    std::size_t leg = 0;
    for (int r = b.row + 1; shape.contains({r, b.col}); ++r) ++leg;
    return arm + leg + 1;
}

Rational x_hook_length(const Partition& shape, Box b, const ContentWeights& w) {
    if (!shape.contains(b)) throw BoxOutOfShape("hook anchor outside the shape");
    Rational sum = 0;
    for (const Box& cell : shape.hook_cells(b)) sum += w.at(content(cell));
    return sum;
}

Rational weighted_weight(const NTableau& t, const ContentWeights& w) {
    Rational sum = 0;
    for (const Box& b : t.shape().boxes())
        sum += Rational(mpz_class(static_cast<unsigned long>(t.at(b)))) * w.at(content(b));
    return sum;
}

bool check_weight_formula(const NTableau& t, const ContentWeights& w) {
    w.require_cover(t.shape());
    Rational lhs = weighted_weight(toggle_rsk(t), w);
    Rational rhs = 0;
    for (const Box& b : t.shape().boxes())
        rhs += Rational(mpz_class(static_cast<unsigned long>(t.at(b)))) *
               x_hook_length(t.shape(), b, w);
    return lhs == rhs;
}

TruncatedSeries rpp_gf(const Partition& shape, std::size_t degree, std::size_t degree_cap) {
    if (degree > degree_cap) throw CapExceeded("truncation degree above the cap");
    TruncatedSeries s = TruncatedSeries::one(degree);
    for (const Box& b : shape.boxes())
        s = s * TruncatedSeries::geometric(hook_length(shape, b), degree);
    return s;
}

namespace {

// Box costs for brute-force enumeration: cost[i] multiplies the entry placed
// at box i, and quadrant[i] is the total cost of the boxes weakly south-east
// of box i (their entries are forced to be at least as large).
struct BrutePlan {
    std::vector<Box> boxes;                // row-major
    std::vector<unsigned long> cost;
    std::vector<unsigned long> quadrant;
};

BrutePlan brute_plan(const Partition& shape, const ContentWeights* w) {
    BrutePlan plan;
    plan.boxes = shape.boxes();
    for (const Box& b : plan.boxes) {
        unsigned long c = 1;
        if (w) {
            const Rational& q = w->at(content(b));
            c = static_cast<unsigned long>(q.get_num().get_ui());
        }
        plan.cost.push_back(c);
    }
    for (const Box& b : plan.boxes) {
        unsigned long total = 0;
        for (std::size_t i = 0; i < plan.boxes.size(); ++i)
            if (plan.boxes[i].row >= b.row && plan.boxes[i].col >= b.col) total += plan.cost[i];
        plan.quadrant.push_back(total);
    }
    return plan;
}

void brute_fill(const BrutePlan& plan, std::vector<Entry>& entries, std::size_t idx,
                unsigned long partial, std::size_t degree, TruncatedSeries& acc) {
    if (idx == plan.boxes.size()) {
        acc.add_at(partial, 1);
        return;
    }
    Box b = plan.boxes[idx];
    Entry low = 0;
    for (std::size_t i = 0; i < idx; ++i) {
        Box p = plan.boxes[i];
        bool neighbour = (p.row == b.row - 1 && p.col == b.col) ||
                         (p.row == b.row && p.col == b.col - 1);
        if (neighbour) low = std::max(low, entries[i]);
    }
    // Entry e forces at least e on every box in the quadrant, so the partial
    // weight grows by at least e * quadrant cost.
    for (Entry e = low;; ++e) {
        unsigned long floor_weight = partial + static_cast<unsigned long>(e) * plan.quadrant[idx];
        if (floor_weight > degree) break;
        entries[idx] = e;
        brute_fill(plan, entries, idx + 1,
                   partial + static_cast<unsigned long>(e) * plan.cost[idx], degree, acc);
    }
}

TruncatedSeries brute_gf(const Partition& shape, const ContentWeights* w, std::size_t degree) {
    BrutePlan plan = brute_plan(shape, w);
    TruncatedSeries acc(degree);
    std::vector<Entry> entries(plan.boxes.size(), 0);
    brute_fill(plan, entries, 0, 0, degree, acc);
    return acc;
}

} // namespace

TruncatedSeries rpp_gf_brute(const Partition& shape, std::size_t degree, std::size_t degree_cap) {
    if (degree > degree_cap) throw CapExceeded("truncation degree above the cap");
    return brute_gf(shape, nullptr, degree);
}

bool weighted_rpp_gf_check(const Partition& shape, const ContentWeights& w, std::size_t degree,
                           std::size_t degree_cap) {
    if (degree > degree_cap) throw CapExceeded("truncation degree above the cap");
    w.require_cover(shape);
    if (!w.integer_valued())
        throw NonPositiveWeight("specialisation check needs positive integer weights");
    TruncatedSeries lhs = brute_gf(shape, &w, degree);
    TruncatedSeries rhs = TruncatedSeries::one(degree);
    for (const Box& b : shape.boxes()) {
        Rational h = x_hook_length(shape, b, w);
        rhs = rhs * TruncatedSeries::geometric(h.get_num().get_ui(), degree);
    }
    return lhs == rhs;
}

std::vector<NTableau> syt_enumerate(const Partition& shape, std::size_t cap) {
    std::vector<NTableau> out;
    shape.for_each_linear_extension(
        [&](const std::vector<Box>& ext) {
            std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(shape.rows()));
            for (int r = 1; r <= shape.rows(); ++r)
                rows[static_cast<std::size_t>(r - 1)].resize(
                    static_cast<std::size_t>(shape.part(r)));
            for (std::size_t m = 0; m < ext.size(); ++m)
                rows[static_cast<std::size_t>(ext[m].row - 1)]
                    [static_cast<std::size_t>(ext[m].col - 1)] = static_cast<Entry>(m + 1);
            out.push_back(NTableau(shape, std::move(rows)));
        },
        cap);
    return out;
}

Rational t_x_value(const NTableau& syt, const ContentWeights& w) {
    const std::size_t n = syt.shape().box_count();
    std::vector<Box> box_of(n + 1);
    for (const Box& b : syt.shape().boxes()) {
        Entry v = syt.at(b);
        if (v < 1 || v > n) throw EntryOutOfRange("standard tableau entries must be 1..n");
        if (box_of[static_cast<std::size_t>(v)].row != 0)
            throw EntryOutOfRange("standard tableau entries must be distinct");
        box_of[static_cast<std::size_t>(v)] = b;
    }
    Rational denom = 1;
    Rational running = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        running += w.at(content(box_of[n + 1 - k]));
        if (running == 0) throw ZeroDenominator("vanishing denominator in hook product");
        denom *= running;
    }
    return Rational(1) / denom;
}

bool check_whlf(const Partition& shape, const ContentWeights& w, std::size_t cap) {
    w.require_cover(shape);
    Rational lhs = 0;
    for (const NTableau& t : syt_enumerate(shape, cap)) lhs += t_x_value(t, w);
    Rational rhs = 1;
    for (const Box& b : shape.boxes()) rhs /= x_hook_length(shape, b, w);
    return lhs == rhs;
}

} // namespace rsk
