#include "krc/cli.hpp"

#include "krc/crystal.hpp"
#include "krc/desk.hpp"
#include "krc/geom.hpp"
#include "krc/graph.hpp"
#include "krc/json_io.hpp"
#include "krc/kmatrix.hpp"
#include "krc/rmatrix.hpp"
#include "krc/tableau.hpp"
#include "krc/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace krc::cli {

namespace {

using nlohmann::ordered_json;

int parse_positive_int(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size() || v < 1) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer, got \"" + text + '"');
    }
}

CrystalShape parse_shape(int n, const std::string& text) {
    const auto sep = text.find('x');
    if (sep == std::string::npos || sep == 0 || sep + 1 == text.size())
        throw std::invalid_argument("shape must look like KxL, got \"" + text + '"');
    return CrystalShape{n, parse_positive_int(text.substr(0, sep), "shape row count"),
                        parse_positive_int(text.substr(sep + 1), "shape column count")};
}

std::vector<CrystalShape> parse_shapes(int n, const std::string& csv, size_t min_count, size_t max_count) {
    std::vector<CrystalShape> out;
    size_t start = 0;
    while (start <= csv.size()) {
        const auto comma = csv.find(',', start);
        const std::string piece = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_shape(n, piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() < min_count || out.size() > max_count)
        throw std::invalid_argument("expected between " + std::to_string(min_count) + " and " +
                                    std::to_string(max_count) + " shapes, got " + std::to_string(out.size()));
    return out;
}

void require_n(int n) {
    if (n < 2) throw std::invalid_argument("--n must be at least 2");
}

void require_shape_match(const RectTableau& t, CrystalShape s) {
    if (t.rows != s.k || t.cols != s.l)
        throw std::invalid_argument("--shape says " + std::to_string(s.k) + "x" + std::to_string(s.l) +
                                    " but --elem is " + std::to_string(t.rows) + "x" + std::to_string(t.cols));
}

ordered_json parse_json_arg(const std::string& text, const char* what) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(what) + " is not valid JSON: " + e.what());
    }
}

void print_reports(const std::vector<VerifierReport>& reports, bool as_json, std::ostream& out) {
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << arr.dump(2) << '\n';
        return;
    }
    for (const auto& r : reports) {
        out << (r.pass() ? "PASS " : "FAIL ") << r.label << " checked=" << r.checked << '\n';
        for (const auto& f : r.failures) out << "  " << f << '\n';
    }
}

struct VerifyArgs {
    std::string target;
    std::string suite;
    int n = 0;
    std::string shapes_csv;
    std::string shape_text;
    std::string b_text, c_text;
    int l = 1, m = 1;
    int64_t samples = -1; /* -1: use the target's default */
    uint64_t seed = kDefaultSeed;
    int grid_radius = 3;
    std::string map_id;
    int64_t bound = 0; /* 0: use the target's default */
    int dmin = -1, dmax = 1;
};

std::vector<VerifierReport> run_verify(const VerifyArgs& a) {
    if (!a.suite.empty()) {
        if (a.suite != "desk") throw std::invalid_argument("unknown suite \"" + a.suite + "\" (expected: desk)");
        DeskOptions o;
        if (a.samples >= 0) o.samples = a.samples;
        o.seed = a.seed;
        o.grid_radius = a.grid_radius;
        return run_desk_suite(o);
    }

    const auto bound_or = [&](int64_t fallback) { return a.bound > 0 ? a.bound : fallback; };
    std::vector<VerifierReport> reports;
    if (a.target == "yang-baxter") {
        require_n(a.n);
        const auto s = parse_shapes(a.n, a.shapes_csv, 3, 3);
        reports.push_back(verify_yang_baxter(s[0], s[1], s[2], bound_or(kTripleBound)));
    } else if (a.target == "reflection") {
        require_n(a.n);
        const auto s = parse_shapes(a.n, a.shapes_csv, 2, 2);
        reports.push_back(verify_reflection(s[0], s[1], bound_or(kPairBound)));
    } else if (a.target == "affine-reflection") {
        require_n(a.n);
        const auto s = parse_shapes(a.n, a.shapes_csv, 2, 2);
        reports.push_back(verify_affine_reflection(s[0], s[1], a.dmin, a.dmax, bound_or(kAffineBound)));
    } else if (a.target == "dual-prop") {
        require_n(a.n);
        const auto s = parse_shapes(a.n, a.shapes_csv, 2, 2);
        reports.push_back(verify_dual_prop(s[0], s[1], bound_or(kPairBound)));
    } else if (a.target == "corollary-dual") {
        require_n(a.n);
        reports.push_back(verify_corollary_dual(parse_shape(a.n, a.shape_text), bound_or(kPairBound)));
    } else if (a.target == "figure1") {
        require_n(a.n);
        if (a.b_text.empty() || a.c_text.empty()) throw std::invalid_argument("figure1 needs --b and --c");
        reports.push_back(verify_figure1(rect_from_text(a.n, a.b_text), rect_from_text(a.n, a.c_text)));
    } else if (a.target == "inversion") {
        require_n(a.n);
        const auto s = parse_shapes(a.n, a.shapes_csv, 2, 2);
        reports.push_back(verify_inversion(s[0], s[1], bound_or(kPairBound)));
    } else if (a.target == "tropical-k") {
        reports.push_back(verify_tropical_k(a.l));
    } else if (a.target == "tropical-r") {
        require_n(a.n);
        reports.push_back(verify_tropical_r_top(a.n, a.l, a.m));
    } else if (a.target == "geom-reflection-n2") {
        reports.push_back(verify_geom_reflection_n2(a.samples >= 0 ? a.samples : 1000, a.seed, a.grid_radius));
    } else if (a.target == "positivity") {
        const int64_t samples = a.samples >= 0 ? a.samples : 100;
        if (a.map_id.empty())
            for (const char* id : {"r-top", "k1", "k2n5"}) reports.push_back(verify_positivity(id, samples, a.seed));
        else
            reports.push_back(verify_positivity(a.map_id, samples, a.seed));
    } else if (a.target == "promotion") {
        require_n(a.n);
        reports.push_back(verify_promotion(parse_shape(a.n, a.shape_text), bound_or(kCrystalBound)));
    } else if (a.target == "connectivity") {
        require_n(a.n);
        const auto s = parse_shapes(a.n, a.shapes_csv, 1, 4);
        reports.push_back(verify_connectivity(s, bound_or(kTripleBound)));
    } else {
        throw std::invalid_argument(
            "unknown verify target \"" + a.target +
            "\" (expected one of: yang-baxter, reflection, affine-reflection, dual-prop, corollary-dual, figure1, "
            "inversion, tropical-k, tropical-r, geom-reflection-n2, positivity, promotion, connectivity, or --suite "
            "desk)");
    }
    return reports;
}

} /* namespace */

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kirillov-Reshetikhin crystal toolkit: enumeration, R/K maps, energies, and equation verifiers"};
    app.name("krc");
    app.require_subcommand(1);

    int n = 0;
    std::string shape_text, shapes_csv, elem_text, op_text, format = "text";
    int op_index = -1;
    int64_t bound = 0;

    auto* enumerate = app.add_subcommand("enumerate", "list every element of B^{k,l}");
    enumerate->add_option("--n", n, "alphabet size")->required();
    enumerate->add_option("--shape", shape_text, "crystal shape KxL")->required();
    enumerate->add_option("--bound", bound, "refuse to enumerate more elements than this (default 10000)");
    enumerate->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* apply = app.add_subcommand("apply", "apply a Kashiwara operator to one element");
    apply->add_option("--op", op_text, "e|f")->required()->check(CLI::IsMember({"e", "f"}));
    apply->add_option("--i", op_index, "operator index in 0..n-1")->required();
    apply->add_option("--n", n, "alphabet size")->required();
    apply->add_option("--shape", shape_text, "crystal shape KxL (checked against --elem)");
    apply->add_option("--elem", elem_text, "tableau literal, rows '/', cells ','")->required();
    apply->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* rmatrix = app.add_subcommand("rmatrix", "apply the combinatorial R-matrix to b1|b2");
    rmatrix->add_option("--n", n, "alphabet size")->required();
    rmatrix->add_option("--elem", elem_text, "two tableau literals joined by '|'")->required();
    rmatrix->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* energy = app.add_subcommand("energy", "energy H of a two-factor element b1|b2");
    energy->add_option("--n", n, "alphabet size")->required();
    energy->add_option("--elem", elem_text, "two tableau literals joined by '|'")->required();
    energy->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* kmatrix = app.add_subcommand("kmatrix", "apply the combinatorial K-matrix to one element");
    kmatrix->add_option("--n", n, "alphabet size")->required();
    kmatrix->add_option("--shape", shape_text, "crystal shape KxL (checked against --elem)");
    kmatrix->add_option("--elem", elem_text, "tableau literal")->required();
    kmatrix->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* graph = app.add_subcommand("graph", "DOT digraph of a crystal or tensor product");
    graph->add_option("--n", n, "alphabet size")->required();
    graph->add_option("--shapes", shapes_csv, "comma-separated shapes K1xL1,K2xL2,...")->required();
    graph->add_option("--bound", bound, "largest product size to draw (default 10000)");

    std::string map_id, semiring = "rational", x_text, y_text, point_text;
    auto* geom = app.add_subcommand("geom", "evaluate a geometric map");
    geom->add_option("--map", map_id, "r-top|k1|k2n5")->required()->check(CLI::IsMember({"r-top", "k1", "k2n5"}));
    geom->add_option("--semiring", semiring, "rational|tropical")->check(CLI::IsMember({"rational", "tropical"}));
    geom->add_option("--x", x_text, "one-row point JSON {\"n\":N,\"x\":[...]} (r-top first slot, k1 input)");
    geom->add_option("--y", y_text, "one-row point JSON, r-top second slot");
    geom->add_option("--point", point_text, "keyed point JSON {\"n\":5,\"k\":2,\"s\":...,\"x\":{\"i,j\":...}}");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check an identity and report counterexamples");
    verify->add_option("target", va.target, "identity to check");
    verify->add_option("--suite", va.suite, "run a preset battery (desk)");
    verify->add_option("--n", va.n, "alphabet size");
    verify->add_option("--shapes", va.shapes_csv, "comma-separated shapes");
    verify->add_option("--shape", va.shape_text, "single shape KxL");
    verify->add_option("--b", va.b_text, "tableau literal for figure1");
    verify->add_option("--c", va.c_text, "tableau literal for figure1");
    verify->add_option("--l", va.l, "column count parameter for tropical targets");
    verify->add_option("--m", va.m, "second column count for tropical-r");
    verify->add_option("--samples", va.samples, "sample count for sampled verifiers");
    verify->add_option("--seed", va.seed, "seed for sampled verifiers");
    verify->add_option("--grid-radius", va.grid_radius, "tropical grid radius for geom-reflection-n2");
    verify->add_option("--map", va.map_id, "positivity map: r-top|k1|k2n5");
    verify->add_option("--bound", va.bound, "override the sweep size bound");
    verify->add_option("--dmin", va.dmin, "smallest mode for affine targets");
    verify->add_option("--dmax", va.dmax, "largest mode for affine targets");
    verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("krc");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    const bool as_json = format == "json";
    try {
        if (app.got_subcommand(enumerate)) {
            require_n(n);
            const CrystalShape s = parse_shape(n, shape_text);
            const int64_t cap = bound > 0 ? bound : 10000;
            if (crystal_size(s.n, s.k, s.l) > cap)
                throw std::invalid_argument("crystal has " + std::to_string(crystal_size(s.n, s.k, s.l)) +
                                            " elements, above the bound " + std::to_string(cap));
            const auto elems = enumerate_crystal(s.n, s.k, s.l);
            if (as_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& t : elems) arr.push_back(tableau_to_json(t));
                out << arr.dump() << '\n';
            } else {
                for (const auto& t : elems) out << to_text(t) << '\n';
            }
        } else if (app.got_subcommand(apply)) {
            require_n(n);
            const RectTableau t = rect_from_text(n, elem_text);
            if (!shape_text.empty()) require_shape_match(t, parse_shape(n, shape_text));
            if (op_index < 0 || op_index >= n) throw std::invalid_argument("--i must lie in 0..n-1");
            const auto image = op_text == "e" ? apply_e(op_index, t) : apply_f(op_index, t);
            if (as_json)
                out << (image ? tableau_to_json(*image) : ordered_json(nullptr)).dump() << '\n';
            else
                out << (image ? to_text(*image) : "none") << '\n';
        } else if (app.got_subcommand(rmatrix)) {
            require_n(n);
            const TensorElem x = tensor_from_text(n, elem_text);
            if (x.factors.size() != 2) throw std::invalid_argument("rmatrix needs exactly two factors");
            const TensorElem image = combinatorial_r(x);
            if (as_json)
                out << tensor_to_json(image).dump() << '\n';
            else
                out << to_text(image) << '\n';
        } else if (app.got_subcommand(energy)) {
            require_n(n);
            const TensorElem x = tensor_from_text(n, elem_text);
            if (x.factors.size() != 2) throw std::invalid_argument("energy needs exactly two factors");
            const int h = energy_h(x);
            if (as_json) {
                ordered_json j;
                j["energy"] = h;
                out << j.dump() << '\n';
            } else {
                out << h << '\n';
            }
        } else if (app.got_subcommand(kmatrix)) {
            require_n(n);
            const RectTableau t = rect_from_text(n, elem_text);
            if (!shape_text.empty()) require_shape_match(t, parse_shape(n, shape_text));
            const RectTableau image = k_matrix(t);
            if (as_json)
                out << tableau_to_json(image).dump() << '\n';
            else
                out << to_text(image) << '\n';
        } else if (app.got_subcommand(graph)) {
            require_n(n);
            const auto shapes = parse_shapes(n, shapes_csv, 1, 4);
            out << export_dot(shapes, bound > 0 ? bound : 10000);
        } else if (app.got_subcommand(geom)) {
            const bool tropical = semiring == "tropical";
            if (map_id == "k2n5") {
                if (point_text.empty()) throw std::invalid_argument("k2n5 needs --point");
                const auto j = parse_json_arg(point_text, "--point");
                out << (tropical ? geom_to_json(geom_k2_n5(geom_tropical_from_json(j)))
                                 : geom_to_json(geom_k2_n5(geom_rational_from_json(j))))
                           .dump()
                    << '\n';
            } else if (map_id == "k1") {
                if (x_text.empty()) throw std::invalid_argument("k1 needs --x");
                const auto j = parse_json_arg(x_text, "--x");
                out << (tropical ? vec_to_json(geom_k1(vec_tropical_from_json(j)))
                                 : vec_to_json(geom_k1(vec_rational_from_json(j))))
                           .dump()
                    << '\n';
            } else {
                if (x_text.empty() || y_text.empty()) throw std::invalid_argument("r-top needs --x and --y");
                const auto jx = parse_json_arg(x_text, "--x");
                const auto jy = parse_json_arg(y_text, "--y");
                ordered_json result;
                if (tropical) {
                    const auto [first, second] = geom_r_top(vec_tropical_from_json(jx), vec_tropical_from_json(jy));
                    result["first"] = vec_to_json(first);
                    result["second"] = vec_to_json(second);
                } else {
                    const auto [first, second] = geom_r_top(vec_rational_from_json(jx), vec_rational_from_json(jy));
                    result["first"] = vec_to_json(first);
                    result["second"] = vec_to_json(second);
                }
                out << result.dump() << '\n';
            }
        } else if (app.got_subcommand(verify)) {
            if (va.target.empty() == va.suite.empty())
                throw std::invalid_argument("verify needs exactly one of a target or --suite desk");
            const auto reports = run_verify(va);
            print_reports(reports, as_json, out);
            return all_pass(reports) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} /* namespace krc::cli */
