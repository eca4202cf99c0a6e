// Command-line front end: insertion, inversion, pyramid arrays, path checks
// and the generating-function identities, all speaking JSON on stdin/stdout.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rsk/classical_rsk.hpp"
#include "rsk/corpus.hpp"
#include "rsk/greene_kleitman.hpp"
#include "rsk/hook_series.hpp"
#include "rsk/json_io.hpp"
#include "rsk/octahedron.hpp"
#include "rsk/toggle_rsk.hpp"
#include "rsk/verify.hpp"

namespace {

using rsk::json;

struct Io {
    std::string in;
    std::string out;
};

void add_io(CLI::App* cmd, Io& io) {
    cmd->add_option("--in", io.in, "Input file (default: stdin)");
    cmd->add_option("--out", io.out, "Output file (default: stdout)");
}

std::string slurp(const Io& io) {
    if (io.in.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(io.in);
    if (!f) throw rsk::ParseError("cannot open input file: " + io.in);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

json read_json(const Io& io) {
    try {
        return json::parse(slurp(io));
    } catch (const json::parse_error& e) {
        throw rsk::ParseError(std::string("invalid JSON input: ") + e.what());
    }
}

void write_text(const Io& io, const std::string& text) {
    if (io.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(io.out);
    if (!f) throw rsk::ParseError("cannot open output file: " + io.out);
    f << text;
}

void emit(const Io& io, const json& j) { write_text(io, j.dump() + "\n"); }

const char* kind_name(rsk::PyramidKind kind) {
    switch (kind) {
        case rsk::PyramidKind::U: return "U";
        case rsk::PyramidKind::Ubar: return "Ubar";
        default: return "Utilde";
    }
}

// Aligned per-level grids, rows labelled by i and columns by j.
std::string render_pyramid(const rsk::PyramidArray& a) {
    std::map<int, std::map<std::pair<int, int>, rsk::PValue>> levels;
    std::size_t width = 1;
    for (const auto& [key, value] : a.entries()) {
        auto [i, j, k] = key;
        levels[k][{i, j}] = value;
        width = std::max(width, std::to_string(value).size());
    }
    std::ostringstream out;
    out << kind_name(a.kind()) << ":\n";
    for (const auto& [k, cells] : levels) {
        int ilo = cells.begin()->first.first, ihi = ilo;
        int jlo = cells.begin()->first.second, jhi = jlo;
        for (const auto& [ij, value] : cells) {
            ilo = std::min(ilo, ij.first);
            ihi = std::max(ihi, ij.first);
            jlo = std::min(jlo, ij.second);
            jhi = std::max(jhi, ij.second);
        }
        out << "  k=" << k << "  (i=" << ilo << ".." << ihi << ", j=" << jlo << ".." << jhi
            << ")\n";
        for (int i = ilo; i <= ihi; ++i) {
            out << "   ";
            for (int j = jlo; j <= jhi; ++j) {
                auto it = cells.find({i, j});
                std::string cell = it == cells.end() ? "." : std::to_string(it->second);
                out << " " << std::string(width - std::min(width, cell.size()), ' ') << cell;
            }
            out << "\n";
        }
    }
    return out.str();
}

int cmd_rsk(const Io& io) {
    rsk::NTableau a = rsk::tableau_from_json(read_json(io));
    auto [p, q] = rsk::rsk_insert(a);
    rsk::GtPattern gp = rsk::gt_pattern(p), gq = rsk::gt_pattern(q);
    json out;
    out["P"] = rsk::to_json(p.tableau());
    out["Q"] = rsk::to_json(q.tableau());
    out["GT_P"] = rsk::to_json(gp);
    out["GT_Q"] = rsk::to_json(gq);
    out["A_hat"] = rsk::to_json(rsk::glue(gp, gq));
    emit(io, out);
    return 0;
}

int cmd_toggle(const Io& io, const std::string& order_text) {
    rsk::NTableau t = rsk::tableau_from_json(read_json(io));
    rsk::NTableau image = [&] {
        if (order_text.empty()) return rsk::toggle_rsk(t);
        json order_json;
        try {
            order_json = json::parse(order_text);
        } catch (const json::parse_error& e) {
            throw rsk::ParseError(std::string("invalid --order JSON: ") + e.what());
        }
        return rsk::toggle_rsk(t, rsk::boxes_from_json(order_json));
    }();
    emit(io, rsk::to_json(image));
    return 0;
}

int cmd_invert(const Io& io) {
    rsk::NTableau image = rsk::tableau_from_json(read_json(io));
    emit(io, rsk::to_json(rsk::toggle_rsk_inverse(image)));
    return 0;
}

int cmd_arrays(const Io& io, bool pretty) {
    rsk::NTableau t = rsk::tableau_from_json(read_json(io));
    rsk::PyramidArray u = rsk::build_u(t);
    rsk::PyramidArray ubar = rsk::build_ubar(u);
    rsk::PyramidArray ut = rsk::build_utilde(ubar, t);
    auto violations = rsk::check_octahedron(ut, t);
    if (pretty) {
        std::ostringstream out;
        out << render_pyramid(u) << render_pyramid(ubar) << render_pyramid(ut);
        out << "octahedron check: " << (violations.empty() ? "ok" : "VIOLATED") << "\n";
        write_text(io, out.str());
    } else {
        json out;
        out["U"] = rsk::to_json(u);
        out["Ubar"] = rsk::to_json(ubar);
        out["Utilde"] = rsk::to_json(ut);
        out["octahedron_ok"] = violations.empty();
        if (!violations.empty()) {
            json list = json::array();
            for (const auto& v : violations)
                list.push_back({{"i", v.i},
                                {"j", v.j},
                                {"k", v.k},
                                {"expected", v.expected},
                                {"actual", v.actual},
                                {"rule", v.rule}});
            out["octahedron_violations"] = list;
        }
        emit(io, out);
    }
    return violations.empty() ? 0 : 1;
}

int cmd_gk_check(const Io& io, std::size_t cap) {
    rsk::NTableau t = rsk::tableau_from_json(read_json(io));
    auto violations = rsk::verify_gk(t, cap);
    json list = json::array();
    for (const auto& v : violations)
        list.push_back({{"i", v.i},
                        {"j", v.j},
                        {"k", v.k},
                        {"best", v.best},
                        {"ubar", v.ubar}});
    json out;
    out["input"] = rsk::to_json(t);
    out["violations"] = list;
    emit(io, out);
    return violations.empty() ? 0 : 1;
}

int cmd_gf(const Io& io, std::size_t degree, const std::string& method) {
    rsk::Partition shape = rsk::partition_from_json(read_json(io));
    rsk::TruncatedSeries series =
        method == "brute" ? rsk::rpp_gf_brute(shape, degree) : rsk::rpp_gf(shape, degree);
    json coeffs = json::array();
    for (const mpz_class& c : series.coefficients()) coeffs.push_back(c.get_str());
    json out;
    out["shape"] = rsk::to_json(shape);
    out["degree"] = degree;
    out["method"] = method;
    out["coefficients"] = coeffs;
    emit(io, out);
    return 0;
}

rsk::ContentWeights weights_from_json(const json& j, const rsk::Partition& shape) {
    if (j.is_null()) return rsk::ContentWeights::ones(shape);
    if (!j.is_object()) throw rsk::ParseError("weights must be an object keyed by content");
    std::map<int, rsk::Rational> w;
    for (const auto& [key, value] : j.items()) {
        int c = 0;
        try {
            std::size_t used = 0;
            c = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw rsk::ParseError("weight key is not an integer content: " + key);
        }
        if (!value.is_string())
            throw rsk::ParseError("weight values must be rational strings like \"1/2\"");
        w[c] = rsk::rational_from_string(value.get<std::string>());
    }
    return rsk::ContentWeights(w);
}

int cmd_hlf(const Io& io, std::size_t max_boxes) {
    json in = read_json(io);
    rsk::Partition shape;
    rsk::ContentWeights weights = rsk::ContentWeights::ones(rsk::Partition{});
    if (in.is_array()) {
        shape = rsk::partition_from_json(in);
        weights = rsk::ContentWeights::ones(shape);
    } else if (in.is_object()) {
        if (!in.contains("shape")) throw rsk::ParseError("hlf input needs a \"shape\"");
        shape = rsk::partition_from_json(in["shape"]);
        weights = weights_from_json(in.value("weights", json()), shape);
    } else {
        throw rsk::ParseError("hlf input must be a shape or {shape, weights}");
    }
    weights.require_cover(shape);
    rsk::Rational lhs = 0;
    for (const rsk::NTableau& t : rsk::syt_enumerate(shape, max_boxes))
        lhs += rsk::t_x_value(t, weights);
    rsk::Rational rhs = 1;
    for (const rsk::Box& b : shape.boxes()) rhs /= rsk::x_hook_length(shape, b, weights);
    json out;
    out["shape"] = rsk::to_json(shape);
    out["lhs"] = rsk::rational_to_string(lhs);
    out["rhs"] = rsk::rational_to_string(rhs);
    out["equal"] = lhs == rhs;
    emit(io, out);
    return lhs == rhs ? 0 : 1;
}

int cmd_verify(const Io& io, const std::string& name, const rsk::RunConfig& cfg) {
    std::vector<rsk::SuiteReport> reports;
    if (name == "all") {
        reports = rsk::run_all(cfg);
    } else {
        try {
            reports.push_back(rsk::run_suite(name, cfg));
        } catch (const std::invalid_argument& e) {
            throw rsk::ParseError(e.what());
        }
    }
    bool ok = true;
    json list = json::array();
    for (const rsk::SuiteReport& r : reports) {
        ok = ok && r.ok();
        list.push_back(r.to_report_json());
    }
    json out;
    out["seed"] = cfg.seed;
    out["ok"] = ok;
    out["reports"] = list;
    emit(io, out);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Piecewise-linear toggle correspondence toolkit"};
    app.require_subcommand(1);

    Io io;
    std::string order_text;
    std::string method = "product";
    std::size_t degree = 12;
    std::size_t hlf_boxes = 6;
    std::size_t gk_cap = rsk::kDefaultNcPathCap;
    std::string suite = "all";
    rsk::RunConfig cfg;

    CLI::App* rsk_cmd = app.add_subcommand("rsk", "Row-insertion correspondence of a square matrix");
    add_io(rsk_cmd, io);

    CLI::App* toggle_cmd = app.add_subcommand("toggle", "Toggle insertion image of a filling");
    add_io(toggle_cmd, io);
    toggle_cmd->add_option("--order", order_text,
                           "Insertion order as a JSON list of [row,col] boxes");

    CLI::App* invert_cmd = app.add_subcommand("invert", "Recover the filling behind an image");
    add_io(invert_cmd, io);

    CLI::App* arrays_cmd = app.add_subcommand("arrays", "Pyramid arrays of a filling");
    add_io(arrays_cmd, io);
    bool pretty = false;
    arrays_cmd->add_flag("--pretty", pretty, "Aligned text grids instead of JSON");

    CLI::App* gk_cmd = app.add_subcommand("gk-check", "Disjoint-path maxima against the pyramid");
    add_io(gk_cmd, io);
    gk_cmd->add_option("--cap", gk_cap, "Box-count cap for path enumeration");

    CLI::App* gf_cmd = app.add_subcommand("gf", "Counting series of a shape's fillings");
    add_io(gf_cmd, io);
    gf_cmd->add_option("--max-degree", degree, "Truncation degree");
    gf_cmd->add_option("--method", method, "Evaluation route")
        ->check(CLI::IsMember({"product", "brute"}));

    CLI::App* hlf_cmd = app.add_subcommand("hlf", "Weighted hook-length identity for a shape");
    add_io(hlf_cmd, io);
    hlf_cmd->add_option("--max-boxes", hlf_boxes, "Box-count cap for tableau enumeration");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run identity suites");
    add_io(verify_cmd, io);
    verify_cmd->add_option("suite", suite, "Suite name or 'all'");
    verify_cmd->add_option("--seed", cfg.seed, "Random corpus seed");
    verify_cmd->add_option("--trials", cfg.trials, "Random cases per suite");
    verify_cmd->add_option("--max-boxes", cfg.max_boxes, "Box-count bound for random shapes");
    verify_cmd->add_option("--max-degree", cfg.max_degree, "Series truncation degree");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(rsk_cmd)) return cmd_rsk(io);
        if (app.got_subcommand(toggle_cmd)) return cmd_toggle(io, order_text);
        if (app.got_subcommand(invert_cmd)) return cmd_invert(io);
        if (app.got_subcommand(arrays_cmd)) return cmd_arrays(io, pretty);
        if (app.got_subcommand(gk_cmd)) return cmd_gk_check(io, gk_cap);
        if (app.got_subcommand(gf_cmd)) return cmd_gf(io, degree, method);
        if (app.got_subcommand(hlf_cmd)) return cmd_hlf(io, hlf_boxes);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(io, suite, cfg);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const rsk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rsk::NotSquare& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rsk::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rsk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
