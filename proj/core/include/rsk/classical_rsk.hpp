#pragma once

#include <utility>
#include <vector>

#include "rsk/tableau.hpp"

namespace rsk {

// Triangular array g(i,j) for 1 <= i <= j <= n with the interlacing
// constraints g(i,j) >= g(i+1,j+1) >= g(i,j+1). Row i holds n+1-i entries.
class GtPattern {
public:
    GtPattern() = default;
    explicit GtPattern(std::vector<std::vector<Entry>> rows);

    int size() const { return static_cast<int>(rows_.size()); }
    Entry g(int i, int j) const; // 1 <= i <= j <= n
    const std::vector<std::vector<Entry>>& rows() const { return rows_; }

    bool operator==(const GtPattern&) const = default;

private:
    std::vector<std::vector<Entry>> rows_;
};

struct BiwordPair {
    int top = 0;
    int bottom = 0;
    auto operator<=>(const BiwordPair&) const = default;
};

// Lexicographic biword of a square matrix: a(i,j) copies of (i, j), rows
// scanned in order. Throws NotSquare for non-square input.
std::vector<BiwordPair> matrix_to_biword(const NTableau& a);

// Row-insertion RSK: biword of a -> (P, Q), both semistandard with entries
// bounded by the matrix dimension.
std::pair<SsytView, SsytView> rsk_insert(const NTableau& a);

// g(i,j) = number of entries <= n+1-i in row j-i+1 of the tableau.
GtPattern gt_pattern(const NTableau& t, int n);
GtPattern gt_pattern(const SsytView& t);

// Square tableau whose lower triangle reads off gp and upper triangle gq:
// entry (i,j) is gp(i-j+1, n+1-j) when i >= j, else gq(j-i+1, n+1-i).
// Requires equal sizes and equal first rows.
NTableau glue(const GtPattern& gp, const GtPattern& gq);

// glue(gt(P), gt(Q)) for (P, Q) = rsk_insert(a).
NTableau classical_hat(const NTableau& a);

} // namespace rsk
