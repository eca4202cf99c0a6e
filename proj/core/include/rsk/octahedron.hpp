#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rsk/tableau.hpp"

namespace rsk {

enum class PyramidKind { U, Ubar, Utilde };

// Sparse 3d array over a shape-dependent domain, one level per k.
// U holds the raw recurrence values, Ubar their prefix sums in k, and
// Utilde the prefix sums shifted down by rectangle sums of the source.
class PyramidArray {
public:
    PyramidArray(PyramidKind kind, Partition shape) : kind_(kind), shape_(std::move(shape)) {}

    PyramidKind kind() const { return kind_; }
    const Partition& shape() const { return shape_; }

    bool in_domain(int i, int j, int k) const;
    PValue at(int i, int j, int k) const; // DomainMismatch when absent
    void set(int i, int j, int k, PValue v);

    // Entries keyed by (i, j, k), iterated in that order.
    const std::map<std::tuple<int, int, int>, PValue>& entries() const { return entries_; }

    bool operator==(const PyramidArray&) const = default;

private:
    PyramidKind kind_;
    Partition shape_;
    std::map<std::tuple<int, int, int>, PValue> entries_;
};

// Levels k = 0 .. min(i,j)+1 with zero floor and ceiling; interior levels
// follow min/max recurrence seeded by the tableau entries at k = 1.
PyramidArray build_u(const NTableau& t);
// Prefix sums of build_u in k, over the tighter one-step domain.
PyramidArray build_ubar(const PyramidArray& u);
// ubar minus the rectangle sum of the source tableau at each base point.
PyramidArray build_utilde(const PyramidArray& ubar, const NTableau& t);

struct OctahedronViolation {
    int i = 0, j = 0, k = 0;
    PValue expected = 0;
    PValue actual = 0;
    std::string rule;
    bool operator==(const OctahedronViolation&) const = default;
};

// Checks the tropical octahedron recurrence at interior points plus the
// k = min(i,j) ceiling. The overload taking the source tableau additionally
// checks the k = 0 floor against rectangle sums.
std::vector<OctahedronViolation> check_octahedron(const PyramidArray& utilde);
std::vector<OctahedronViolation> check_octahedron(const PyramidArray& utilde, const NTableau& t);

// Reads the insertion image off a U array: the value of box b comes from the
// level just above the border box on b's diagonal.
NTableau extract_rpp(const PyramidArray& u, const Partition& shape);

} // namespace rsk
