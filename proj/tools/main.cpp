#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hfk11/builtins.hpp"
#include "hfk11/errors.hpp"
#include "hfk11/fibered.hpp"
#include "hfk11/invariants.hpp"
#include "hfk11/knot_complex.hpp"
#include "hfk11/arrangement.hpp"
#include "hfk11/selftest.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitStabilization = 3;

struct DiagramSource {
    std::string builtin;
    std::string path;
};

hfk::Diagram load_diagram(const DiagramSource& src) {
    if (!src.builtin.empty()) return hfk::builtin_diagram(src.builtin);
    if (src.path.empty()) throw hfk::ParseError("no diagram given: use --builtin or --diagram");
    std::string text;
    if (src.path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(src.path);
        if (!in) throw hfk::ParseError("cannot open " + src.path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    return hfk::parse_diagram(text);
}

std::string source_name(const DiagramSource& src) {
    return !src.builtin.empty() ? src.builtin : src.path;
}

json ranks_json(const hfk::HomologySummary& h) {
    json arr = json::array();
    for (const auto& [key, r] : h.free_ranks)
        arr.push_back({{"alexander", key.first}, {"maslov", key.second}, {"rank", r}});
    for (const auto& t : h.torsion)
        arr.push_back({{"alexander", t.alexander},
                       {"maslov", t.maslov},
                       {"torsion_order", t.order.str()}});
    return arr;
}

json polynomial_json(const hfk::LaurentPolynomial& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back({{"doubled_exponent", e}, {"coefficient", c}});
    return arr;
}

void print_table(std::ostream& os, const hfk::HomologySummary& h) {
    for (const auto& [key, r] : h.free_ranks)
        os << "  (A=" << key.first << ", M=" << key.second << "): rank " << r << "\n";
    for (const auto& t : h.torsion)
        os << "  (A=" << t.alexander << ", M=" << t.maslov << "): torsion Z/" << t.order << "\n";
}

int cmd_hfk(const DiagramSource& src, hfk::Coefficients coeffs, bool as_json) {
    hfk::Diagram d = load_diagram(src);
    hfk::KnotComplex c = hfk::cfk_from_diagram(d, coeffs);
    hfk::HomologySummary hat = hfk::hfk_hat(c);
    hfk::LaurentPolynomial alex = hfk::alexander_polynomial(hat);
    int genus = hfk::genus_lower_bound(hat);

    bool conj_ok = true;
    for (const auto& [key, r] : hat.free_ranks)
        if (hat.rank(-key.first, key.second - 2 * key.first) != r) conj_ok = false;
    hfk::HomologySummary mirrored =
        hfk::hfk_hat(hfk::cfk_from_diagram(hfk::reflect_diagram(d), coeffs));
    bool mirror_ok = true;
    for (const auto& [key, r] : hat.free_ranks)
        if (mirrored.rank(-key.first, -key.second) != r) mirror_ok = false;
    if (mirrored.total_rank() != hat.total_rank()) mirror_ok = false;

    if (as_json) {
        json j;
        j["schema"] = "hfk11.report.hfk.v1";
        j["command"] = "hfk";
        j["input"] = source_name(src);
        j["coefficients"] = coeffs == hfk::Coefficients::Mod2 ? "mod2" : "int";
        j["generators"] = c.generators.size();
        j["hfk_hat"] = ranks_json(hat);
        j["alexander_polynomial"] = polynomial_json(alex);
        j["alexander_polynomial_text"] = alex.str();
        j["genus_lower_bound"] = genus;
        j["symmetry"] = {{"conjugation", conj_ok}, {"mirror", mirror_ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "knot homology of " << source_name(src) << " ("
                  << c.generators.size() << " generators)\n";
        print_table(std::cout, hat);
        std::cout << "Alexander polynomial: " << alex.str() << "\n";
        std::cout << "genus lower bound: " << genus << "\n";
        std::cout << "conjugation symmetry: " << (conj_ok ? "ok" : "FAILED") << "\n";
        std::cout << "mirror rule: " << (mirror_ok ? "ok" : "FAILED") << "\n";
    }
    return kExitOk;
}

int cmd_surgery(const DiagramSource& src, long p, long m, const std::string& side, long truncation,
                bool as_json) {
    hfk::Diagram d = load_diagram(src);
    hfk::KnotComplex c = hfk::cfk_from_diagram(d, hfk::Coefficients::Mod2);
    int genus = hfk::genus_lower_bound(hfk::hfk_hat(c));

    hfk::RegionSpec region;
    std::string region_text;
    bool shift_known = side == "neg";
    hfk::Rational shift(0);
    if (side == "neg") {
        region = {hfk::RegionKind::IAndJ, m, 0};
        region_text = "{i >= 0 and j >= " + std::to_string(-m) + "}";
        shift = hfk::Rational(p - (2 * m + p) * (2 * m + p), 4 * p);
    } else {
        region = {hfk::RegionKind::IOrJ, -(m + 1), 0};
        region_text = "{i >= 0 or j >= " + std::to_string(m + 1) + "}";
    }
    if (truncation <= 0) truncation = hfk::default_truncation(c, region);
    hfk::TowerSummary s = hfk::region_homology(c, region, truncation);

    bool warn = p < 2 * genus - 1;
    if (as_json) {
        json j;
        j["schema"] = "hfk11.report.surgery.v1";
        j["command"] = "surgery";
        j["input"] = source_name(src);
        j["p"] = p;
        j["m"] = m;
        j["side"] = side;
        j["region"] = region_text;
        j["truncation"] = truncation;
        j["warning_small_p"] = warn;
        j["towers"] = json::array();
        for (const auto& t : s.towers) {
            json tj = {{"spin_c_class", t.alexander}, {"base_maslov", t.base_maslov}};
            if (shift_known)
                tj["base_shifted"] = hfk::rational_string(hfk::Rational(t.base_maslov) + shift);
            j["towers"].push_back(tj);
        }
        j["reduced"] = ranks_json(s.reduced);
        if (shift_known) j["grading_shift"] = hfk::rational_string(shift);
        else j["grading_shift"] = nullptr;
        if (source_name(src) == "knot_9_42") {
            j["reference_zero_surgery"] = {
                {"source", "bundled reference values, not computed"},
                {"classes", {{"0", "two towers at -1/2 and 1/2"}, {"1", "Z"}, {"-1", "Z"}}},
                {"d_invariants", {{"d_plus_half", "1/2"}, {"d_minus_half", "-1/2"}}}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "surgery report for " << source_name(src) << " (p=" << p << ", m=" << m
                  << ", side=" << side << ", region " << region_text << ")\n";
        if (warn)
            std::cout << "  note: p below 2g-1 = " << 2 * genus - 1
                      << "; the identification is only guaranteed for large p\n";
        for (const auto& t : s.towers) {
            std::cout << "  tower: base Maslov " << t.base_maslov;
            if (shift_known)
                std::cout << " (shifted: "
                          << hfk::rational_string(hfk::Rational(t.base_maslov) + shift) << ")";
            std::cout << "\n";
        }
        std::cout << "  reduced part:\n";
        print_table(std::cout, s.reduced);
        if (shift_known)
            std::cout << "  grading shift: " << hfk::rational_string(shift) << "\n";
        else
            std::cout << "  gradings reported in the internal normalization\n";
    }
    return kExitOk;
}

int cmd_fibered(const std::string& model, int g, int k, int dparam, bool as_json) {
    json j;
    j["schema"] = "hfk11.report.fibered.v1";
    j["command"] = "fibered";
    j["model"] = model;
    j["g"] = g;
    std::ostringstream text;
    if (model == "sigma_s1") {
        auto ranks = hfk::hf_sigma_times_s1(g, k);
        j["k"] = k;
        long long total = 0;
        json arr = json::array();
        for (const auto& [deg, r] : ranks) {
            arr.push_back({{"degree", deg}, {"rank", r}});
            total += r;
        }
        j["ranks"] = arr;
        j["total"] = total;
        text << "total rank " << total;
    } else if (model == "dehn_twist") {
        auto res = hfk::hf_dehn_twist(g, k);
        j["k"] = k;
        long long total = 0;
        json arr = json::array();
        for (const auto& [deg, r] : res.ranks) {
            arr.push_back({{"degree", deg}, {"rank", r}});
            total += r;
        }
        j["ranks"] = arr;
        j["total"] = total;
        j["module_structure_pinned"] = res.module_structure_pinned;
        text << "total rank " << total
             << (res.module_structure_pinned ? "" : " (module structure not pinned: 3d >= 2g-1)");
    } else if (model == "x_module") {
        auto x = hfk::build_x(g, dparam);
        j["d"] = dparam;
        json arr = json::array();
        for (const auto& [deg, r] : x.ranks_by_degree())
            arr.push_back({{"degree", deg}, {"rank", r}});
        j["ranks"] = arr;
        j["total"] = x.rank();
        text << "total rank " << x.rank();
    } else if (model == "macdonald") {
        auto betti = hfk::macdonald_oracle(g, dparam);
        j["d"] = dparam;
        long long total = 0;
        json arr = json::array();
        for (const auto& [deg, b] : betti) {
            arr.push_back({{"degree", deg}, {"rank", b}});
            total += b;
        }
        j["ranks"] = arr;
        j["total"] = total;
        text << "total rank " << total;
    } else {
        throw std::invalid_argument("unknown model: " + model);
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << model << " g=" << g
                  << (model == "x_module" || model == "macdonald"
                          ? " d=" + std::to_string(dparam)
                          : " k=" + std::to_string(k))
                  << ": " << text.str() << "\n";
    return kExitOk;
}

int cmd_selftest(const std::string& filter, bool as_json) {
    int failures = 0;
    json results = json::array();
    for (const auto& check : hfk::acceptance_checks()) {
        std::string label = "criterion " + std::to_string(check.criterion) + ": " + check.name;
        if (!filter.empty() && label.find(filter) == std::string::npos) continue;
        hfk::CheckResult r = hfk::run_check(check);
        if (!r.pass) ++failures;
        if (as_json) {
            results.push_back({{"criterion", check.criterion},
                               {"name", check.name},
                               {"pass", r.pass},
                               {"expected", r.expected},
                               {"actual", r.actual},
                               {"seconds", r.seconds}});
        } else {
            std::cout << (r.pass ? "PASS " : "FAIL ") << label << "\n";
            if (!r.pass) {
                std::cout << "      expected: " << r.expected << "\n";
                std::cout << "      actual:   " << r.actual << "\n";
            }
        }
    }
    if (as_json) {
        json j;
        j["schema"] = "hfk11.report.selftest.v1";
        j["command"] = "selftest";
        j["failures"] = failures;
        j["results"] = results;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " failed")
                  << "\n";
    }
    return failures == 0 ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot homology engine for genus-one doubly-pointed diagrams"};
    app.require_subcommand(1);

    DiagramSource src;
    bool as_json = false;
    std::string coeffs_text = "mod2";

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", src.builtin, "builtin diagram name");
        cmd->add_option("--diagram", src.path, "diagram JSON path, or - for stdin");
        cmd->add_flag("--json", as_json, "JSON report");
    };

    auto* hfk_cmd = app.add_subcommand("hfk", "hat homology, Alexander polynomial, genus bound");
    add_source(hfk_cmd);
    hfk_cmd->add_option("--coefficients", coeffs_text, "mod2 or int")
        ->check(CLI::IsMember({"mod2", "int"}));

    long p = 5, m = 0, truncation = 0;
    std::string side = "neg";
    auto* surgery_cmd = app.add_subcommand("surgery", "region homology of a large surgery");
    add_source(surgery_cmd);
    surgery_cmd->add_option("--p", p, "surgery coefficient magnitude")->required();
    surgery_cmd->add_option("--m", m, "spin-c class")->required();
    surgery_cmd->add_option("--side", side, "neg or pos")->check(CLI::IsMember({"neg", "pos"}));
    surgery_cmd->add_option("--truncation", truncation, "override the truncation depth");

    std::string model = "sigma_s1";
    int g = 2, k = 1, dparam = 0;
    auto* fibered_cmd = app.add_subcommand("fibered", "exterior-algebra model computations");
    fibered_cmd->add_option("--model", model, "sigma_s1 | dehn_twist | x_module | macdonald")
        ->check(CLI::IsMember({"sigma_s1", "dehn_twist", "x_module", "macdonald"}));
    fibered_cmd->add_option("--g", g, "genus")->required();
    fibered_cmd->add_option("--k", k, "spin-c level (sigma_s1, dehn_twist)");
    fibered_cmd->add_option("--d", dparam, "symmetric product degree (x_module, macdonald)");
    fibered_cmd->add_flag("--json", as_json, "JSON report");

    std::string filter;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance checklist");
    selftest_cmd->add_option("--filter", filter, "run only checks whose label contains this");
    selftest_cmd->add_flag("--json", as_json, "JSON report");

    auto* complex_cmd = app.add_subcommand("complex", "emit the knot complex as JSON");
    add_source(complex_cmd);
    complex_cmd->add_option("--coefficients", coeffs_text, "mod2 or int")
        ->check(CLI::IsMember({"mod2", "int"}));

    int scale = 0;
    auto* dump_cmd = app.add_subcommand("dump-arrangement", "debug dump of the lifted picture");
    add_source(dump_cmd);
    dump_cmd->add_option("--scale", scale, "window scale (0 = stabilize)");

    auto* diagram_cmd = app.add_subcommand("diagram", "emit a builtin diagram as JSON");
    diagram_cmd->add_option("--builtin", src.builtin, "builtin diagram name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        hfk::Coefficients coeffs =
            coeffs_text == "int" ? hfk::Coefficients::Integer : hfk::Coefficients::Mod2;
        if (hfk_cmd->parsed()) return cmd_hfk(src, coeffs, as_json);
        if (surgery_cmd->parsed()) return cmd_surgery(src, p, m, side, truncation, as_json);
        if (fibered_cmd->parsed()) return cmd_fibered(model, g, k, dparam, as_json);
        if (selftest_cmd->parsed()) return cmd_selftest(filter, as_json);
        if (complex_cmd->parsed()) {
            std::cout << hfk::knot_complex_to_json(
                hfk::cfk_from_diagram(load_diagram(src), coeffs));
            return kExitOk;
        }
        if (dump_cmd->parsed()) {
            hfk::Diagram d = load_diagram(src);
            hfk::Arrangement arr = scale > 0 ? hfk::lift(d, scale) : hfk::stabilize(d);
            std::cout << arr.debug_json();
            return kExitOk;
        }
        if (diagram_cmd->parsed()) {
            std::cout << hfk::serialize_diagram(hfk::builtin_diagram(src.builtin));
            return kExitOk;
        }
    } catch (const hfk::StabilizationLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStabilization;
    } catch (const hfk::WindowTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStabilization;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
