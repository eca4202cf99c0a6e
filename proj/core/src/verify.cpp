#include "rsk/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsk/classical_rsk.hpp"
#include "rsk/corpus.hpp"
#include "rsk/greene_kleitman.hpp"
#include "rsk/hook_series.hpp"
#include "rsk/octahedron.hpp"
#include "rsk/toggle_rsk.hpp"

namespace rsk {

json SuiteReport::to_report_json() const {
    return json{{"suite", suite}, {"cases", cases}, {"ok", ok()}, {"violations", violations}};
}

namespace {

void finish(SuiteReport& report) {
    std::sort(report.violations.begin(), report.violations.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
}

json violation(const char* rule, const NTableau& input, json detail = json::object()) {
    detail["rule"] = rule;
    detail["input"] = to_json(input);
    return detail;
}

// Shared corpora. The exhaustive square corpus fixes entries <= 2; random
// squares are 4x4 with entries <= 3.
void for_each_square_exhaustive(const std::function<void(const NTableau&)>& fn) {
    for (int n : {2, 3})
        for_each_filling(Partition(std::vector<int>(static_cast<std::size_t>(n), n)), 2, fn);
}

void for_each_shape_exhaustive(std::size_t max_boxes, Entry max_entry,
                               const std::function<void(const NTableau&)>& fn) {
    for (const Partition& shape : partitions_up_to(max_boxes))
        for_each_filling(shape, max_entry, fn);
}

// The corpus shared by the structural suites: exhaustive small squares,
// exhaustive small shapes, then seeded random squares and random shapes.
void for_each_structural_case(const RunConfig& cfg,
                              const std::function<void(const NTableau&)>& fn) {
    for_each_square_exhaustive(fn);
    for_each_shape_exhaustive(5, 2, fn);
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.trials; ++i) fn(random_square(rng, 4));
    for (std::size_t i = 0; i < cfg.trials; ++i) fn(random_tableau(rng, cfg.max_boxes));
}

} // namespace

SuiteReport suite_welldefined(const RunConfig& cfg) {
    SuiteReport report{"welldefined", 0, {}};
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        NTableau t = random_tableau(rng, cfg.max_boxes);
        NTableau base = toggle_rsk(t);
        for (int e = 0; e < 5; ++e) {
            std::vector<Box> order = random_linear_extension(rng, t.shape());
            ++report.cases;
            if (toggle_rsk(t, order) != base) {
                json ord = json::array();
                for (Box b : order) ord.push_back(to_json(b));
                report.violations.push_back(violation("order-independence", t, {{"order", ord}}));
            }
        }
    }
    finish(report);
    return report;
}

SuiteReport suite_bijection(const RunConfig&) {
    SuiteReport report{"bijection", 0, {}};
    for_each_shape_exhaustive(5, 2, [&](const NTableau& t) {
        ++report.cases;
        NTableau image = toggle_rsk(t);
        if (toggle_rsk_inverse(image) != t)
            report.violations.push_back(violation("inverse-after-insert", t));
        if (t.is_rpp() && toggle_rsk(toggle_rsk_inverse(t)) != t)
            report.violations.push_back(violation("insert-after-inverse", t));
    });
    finish(report);
    return report;
}

SuiteReport suite_diagrect(const RunConfig& cfg) {
    SuiteReport report{"diagrect", 0, {}};
    for_each_structural_case(cfg, [&](const NTableau& t) {
        ++report.cases;
        NTableau image = toggle_rsk(t);
        for (const Box& b : t.shape().border_boxes())
            if (image.diag_sum(b) != t.rect_sum(b))
                report.violations.push_back(violation("diagonal-vs-rectangle", t,
                                                      {{"box", to_json(b)}}));
    });
    finish(report);
    return report;
}

SuiteReport suite_transpose(const RunConfig& cfg) {
    SuiteReport report{"transpose", 0, {}};
    for_each_structural_case(cfg, [&](const NTableau& t) {
        ++report.cases;
        if (toggle_rsk(t.transposed()) != toggle_rsk(t).transposed())
            report.violations.push_back(violation("transpose-equivariance", t));
    });
    finish(report);
    return report;
}

SuiteReport suite_oracle(const RunConfig& cfg) {
    SuiteReport report{"oracle", 0, {}};
    auto check = [&](const NTableau& a) {
        ++report.cases;
        if (toggle_rsk(a) != classical_hat(a))
            report.violations.push_back(violation("toggle-vs-row-insertion", a));
    };
    for_each_square_exhaustive(check);
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.trials; ++i) check(random_square(rng, 4));
    finish(report);
    return report;
}

SuiteReport suite_octahedron(const RunConfig& cfg) {
    SuiteReport report{"octahedron", 0, {}};
    for_each_structural_case(cfg, [&](const NTableau& t) {
        ++report.cases;
        PyramidArray u = build_u(t);
        if (extract_rpp(u, t.shape()) != toggle_rsk(t))
            report.violations.push_back(violation("extraction-vs-insertion", t));
        auto bad = check_octahedron(build_utilde(build_ubar(u), t), t);
        for (const auto& v : bad)
            report.violations.push_back(violation(
                "octahedron-recurrence", t,
                {{"i", v.i}, {"j", v.j}, {"k", v.k}, {"rule", v.rule},
                 {"expected", v.expected}, {"actual", v.actual}}));
    });
    finish(report);
    return report;
}

SuiteReport suite_gk(const RunConfig& cfg) {
    SuiteReport report{"gk", 0, {}};
    auto check = [&](const NTableau& t) {
        ++report.cases;
        for (const GkViolation& v : verify_gk(t))
            report.violations.push_back(violation(
                "paths-vs-prefix-sums", t,
                {{"i", v.i}, {"j", v.j}, {"k", v.k}, {"m", v.best}, {"ubar", v.ubar}}));
    };
    for_each_filling(Partition({2, 2}), 2, check);
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.trials; ++i) check(random_tableau(rng, cfg.max_boxes));
    finish(report);
    return report;
}

SuiteReport suite_gf(const RunConfig& cfg) {
    SuiteReport report{"gf", 0, {}};
    constexpr std::size_t kDegree = 8;
    Rng rng(cfg.seed);
    for (const Partition& shape : partitions_up_to(5)) {
        ++report.cases;
        if (rpp_gf(shape, kDegree) != rpp_gf_brute(shape, kDegree))
            report.violations.push_back(
                json{{"rule", "product-vs-brute"}, {"shape", to_json(shape)}});
        for (int trial = 0; trial < 10; ++trial) {
            std::map<int, Rational> w;
            for (int c = -(shape.rows() - 1); c <= shape.max_col() - 1; ++c)
                w[c] = rng.range(1, 3);
            if (shape.empty()) w[0] = 1;
            ++report.cases;
            if (!weighted_rpp_gf_check(shape, ContentWeights(w), kDegree))
                report.violations.push_back(json{{"rule", "weighted-product-vs-brute"},
                                                 {"shape", to_json(shape)},
                                                 {"trial", trial}});
        }
    }
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        NTableau t = random_tableau(rng, cfg.max_boxes);
        std::map<int, Rational> w;
        for (int c = -(t.shape().rows() - 1); c <= t.shape().max_col() - 1; ++c)
            w[c] = make_rational(rng.range(1, 4), rng.range(1, 4));
        if (t.shape().empty()) w[0] = 1;
        ++report.cases;
        if (!check_weight_formula(t, ContentWeights(w)))
            report.violations.push_back(violation("weighted-size-formula", t));
    }
    finish(report);
    return report;
}

SuiteReport suite_whlf(const RunConfig& cfg) {
    SuiteReport report{"whlf", 0, {}};
    Rng rng(cfg.seed);
    for (const Partition& shape : partitions_up_to(6)) {
        // Unit weights reduce the identity to counting standard tableaux.
        mpz_class hooks = 1, factorial = 1;
        for (const Box& b : shape.boxes()) hooks *= static_cast<unsigned long>(hook_length(shape, b));
        for (std::size_t m = 1; m <= shape.box_count(); ++m)
            factorial *= static_cast<unsigned long>(m);
        ++report.cases;
        if (mpz_class(syt_enumerate(shape).size()) * hooks != factorial)
            report.violations.push_back(
                json{{"rule", "tableau-count-vs-hooks"}, {"shape", to_json(shape)}});
        for (int trial = 0; trial < 20; ++trial) {
            std::map<int, Rational> w;
            for (int c = -(shape.rows() - 1); c <= shape.max_col() - 1; ++c)
                w[c] = make_rational(rng.range(1, 5), rng.range(1, 4));
            if (shape.empty()) w[0] = 1;
            ++report.cases;
            if (!check_whlf(shape, ContentWeights(w)))
                report.violations.push_back(json{{"rule", "weighted-hook-formula"},
                                                 {"shape", to_json(shape)},
                                                 {"trial", trial}});
        }
    }
    // Pinned example: the staircase-ish 5-box tableau at unit weights.
    NTableau sample = NTableau::from_rows({{1, 3, 4}, {2, 5}});
    ++report.cases;
    if (t_x_value(sample, ContentWeights::ones(sample.shape())) != make_rational(1, 120))
        report.violations.push_back(json{{"rule", "unit-weight-sample"}});
    finish(report);
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "welldefined", "bijection", "diagrect", "transpose", "oracle",
        "octahedron",  "gk",        "gf",       "whlf"};
    return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "welldefined") return suite_welldefined(cfg);
    if (name == "bijection") return suite_bijection(cfg);
    if (name == "diagrect") return suite_diagrect(cfg);
    if (name == "transpose") return suite_transpose(cfg);
    if (name == "oracle") return suite_oracle(cfg);
    if (name == "octahedron") return suite_octahedron(cfg);
    if (name == "gk") return suite_gk(cfg);
    if (name == "gf") return suite_gf(cfg);
    if (name == "whlf") return suite_whlf(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const RunConfig& cfg) {
    std::vector<SuiteReport> out;
    out.reserve(suite_names().size());
    for (const std::string& name : suite_names()) out.push_back(run_suite(name, cfg));
    return out;
}

} // namespace rsk
