#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsk/json_io.hpp"

namespace rsk {

struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::size_t max_boxes = 9;
    std::size_t max_degree = 12;
};

struct SuiteReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<json> violations; // sorted canonically
    bool ok() const { return violations.empty(); }
    json to_report_json() const;
};

// Insertion along different linear extensions gives one answer.
SuiteReport suite_welldefined(const RunConfig& cfg);
// Insertion and its inverse cancel, exhaustively on small shapes.
SuiteReport suite_bijection(const RunConfig& cfg);
// Diagonal sums of the image match rectangle sums of the input at borders.
SuiteReport suite_diagrect(const RunConfig& cfg);
// Insertion commutes with transposition.
SuiteReport suite_transpose(const RunConfig& cfg);
// Toggle insertion agrees with row-insertion RSK glued through patterns.
SuiteReport suite_oracle(const RunConfig& cfg);
// Pyramid arrays satisfy the octahedron recurrence and reproduce the image.
SuiteReport suite_octahedron(const RunConfig& cfg);
// Disjoint-path maxima match the prefix-sum pyramid.
SuiteReport suite_gk(const RunConfig& cfg);
// Generating functions: product formula vs brute force, weighted variants.
SuiteReport suite_gf(const RunConfig& cfg);
// Content-weighted hook length formula over standard tableaux.
SuiteReport suite_whlf(const RunConfig& cfg);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for unknown names; "all" is not a suite here.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);
std::vector<SuiteReport> run_all(const RunConfig& cfg);

} // namespace rsk
