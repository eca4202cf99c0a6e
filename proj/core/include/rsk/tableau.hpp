#pragma once

#include <vector>

#include "rsk/checked.hpp"
#include "rsk/partition.hpp"

namespace rsk {

// Filling of a Young diagram with nonnegative integers, one entry per box.
// No monotonicity is imposed here; is_rpp() reports it and SsytView enforces
// the semistandard conditions.
class NTableau {
public:
    NTableau() = default;
    NTableau(Partition shape, std::vector<std::vector<Entry>> rows);
    // Shape derived from row lengths; throws if lengths do not weakly decrease.
    static NTableau from_rows(std::vector<std::vector<Entry>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<Entry>>& rows() const { return rows_; }

    Entry at(Box b) const;         // BoxOutOfShape outside the diagram
    Entry at_or_zero(Box b) const; // 0 outside the diagram

    // Weakly increasing along rows and down columns.
    bool is_rpp() const;

    std::vector<Entry> row_sums() const;
    std::vector<Entry> col_sums() const;

    // Sum along the NW diagonal ending at b (b included).
    Entry diag_sum(Box b) const;
    // Sum over the upper-left rectangle with corner b.
    Entry rect_sum(Box b) const;

    // Sum of all entries.
    Entry total() const;

    NTableau transposed() const;

    bool operator==(const NTableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<Entry>> rows_;
};

// Semistandard view: rows weakly increase, columns strictly increase, and all
// entries lie in 1..max_entry. Construction validates.
class SsytView {
public:
    SsytView(NTableau t, int max_entry);

    const NTableau& tableau() const { return t_; }
    int max_entry() const { return max_entry_; }

    // type()[v-1] = multiplicity of the value v, for v in 1..max_entry.
    std::vector<Entry> type_vector() const;

private:
    NTableau t_;
    int max_entry_ = 0;
};

} // namespace rsk
