#include "hfk11/knot_complex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>

#include "hfk11/arrangement.hpp"
#include "hfk11/errors.hpp"

namespace hfk {

int KnotComplex::alexander_spread() const {
    if (generators.empty()) return 0;
    int lo = generators[0].alexander, hi = lo;
    for (const auto& g : generators) {
        lo = std::min(lo, g.alexander);
        hi = std::max(hi, g.alexander);
    }
    return hi - lo;
}

namespace {

/// Sub- or full-complex homology helper: build a bigraded complex out of the
/// selected arrows. When `collapse_alexander` is set the complex is graded by
/// Maslov alone (the selected arrows need not preserve A).
HomologySummary arrows_homology(const KnotComplex& c,
                                const std::function<bool(const KnotComplex::Arrow&)>& keep,
                                bool collapse_alexander) {
    BigradedComplex b;
    b.coeffs = c.coeffs;
    for (int i = 0; i < static_cast<int>(c.generators.size()); ++i)
        b.generators.push_back({std::to_string(i),
                                collapse_alexander ? 0 : c.generators[i].alexander,
                                c.generators[i].maslov});
    for (const auto& a : c.arrows)
        if (keep(a)) b.arrows.push_back({a.from, a.to, a.coefficient});
    return homology(b);
}

/// Backtracking search for +-1 signs making the composite differential vanish
/// over the integers. The paper's example differentials are stated up to
/// sign, so the signs are found, not derived.
bool assign_signs(KnotComplex& c) {
    int m = static_cast<int>(c.arrows.size());
    if (m > 28) throw SignAssignmentFailed("too many arrows for the sign search");

    struct PairRef {
        int first, second;  // arrow indices with to(first) == from(second)
    };
    std::map<std::tuple<int, int, int>, std::vector<PairRef>> groups;  // (x, z, total n_w)
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (c.arrows[i].to == c.arrows[j].from)
                groups[{c.arrows[i].from, c.arrows[j].to, c.arrows[i].n_w + c.arrows[j].n_w}]
                    .push_back({i, j});

    std::vector<int> sign(m, 0);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == m) {
            for (const auto& [key, pairs] : groups) {
                long long sum = 0;
                for (const auto& p : pairs) sum += sign[p.first] * sign[p.second];
                if (sum != 0) return false;
            }
            return true;
        }
        for (int s : {1, -1}) {
            sign[idx] = s;
            bool feasible = true;
            for (const auto& [key, pairs] : groups) {
                long long sum = 0;
                int open = 0;
                for (const auto& p : pairs) {
                    if (sign[p.first] && sign[p.second])
                        sum += sign[p.first] * sign[p.second];
                    else
                        ++open;
                }
                if (std::llabs(sum) > open) {
                    feasible = false;
                    break;
                }
            }
            if (feasible && rec(idx + 1)) return true;
        }
        sign[idx] = 0;
        return false;
    };
    if (!rec(0)) return false;
    for (int i = 0; i < m; ++i) c.arrows[i].coefficient = sign[i];
    return true;
}

}  // namespace

bool verify_cfk_d_squared(const KnotComplex& c) {
    std::map<std::tuple<int, int, int, int>, long long> composite;  // (x, z, nw, nz)
    for (const auto& a : c.arrows)
        for (const auto& b : c.arrows)
            if (a.to == b.from)
                composite[{a.from, b.to, a.n_w + b.n_w, a.n_z + b.n_z}] +=
                    a.coefficient * b.coefficient;
    for (const auto& [key, v] : composite)
        if (c.coeffs == Coefficients::Mod2 ? (v % 2 != 0) : (v != 0)) return false;
    return true;
}

KnotComplex cfk_from_diagram(const Diagram& d, Coefficients coeffs) {
    auto violations = validate(d);
    if (!violations.empty())
        throw ValidationError(violations.front().code, violations.front().detail);

    Arrangement arr = stabilize(d);
    int n = arr.point_count();

    KnotComplex c;
    c.coeffs = coeffs;
    c.generators.resize(n);

    // relative gradings, integrated along consecutive disk classes
    for (int k = 0; k + 1 < n; ++k) {
        DiskClass step = arr.disk_class(k, k + 1);
        int mu = arr.maslov_index(step);
        c.generators[k + 1].alexander =
            c.generators[k].alexander - static_cast<int>(step.n_z - step.n_w);
        c.generators[k + 1].maslov =
            c.generators[k].maslov - (mu - 2 * static_cast<int>(step.n_w));
    }

    for (const auto& cls : arr.positive_mu1_classes()) {
        KnotComplex::Arrow a;
        a.from = cls.from;
        a.to = cls.to;
        a.n_w = static_cast<int>(cls.n_w);
        a.n_z = static_cast<int>(cls.n_z);
        a.coefficient = 1;
        c.arrows.push_back(a);
    }

    // both grading constraints must come out of the geometry
    for (const auto& a : c.arrows) {
        if (c.generators[a.from].alexander - c.generators[a.to].alexander != a.n_z - a.n_w)
            throw Error("cfk_from_diagram: arrow violates the Alexander constraint");
        if (c.generators[a.from].maslov - c.generators[a.to].maslov != 1 - 2 * a.n_w)
            throw Error("cfk_from_diagram: arrow violates the Maslov constraint");
    }

    if (coeffs == Coefficients::Integer) {
        if (!assign_signs(c)) throw SignAssignmentFailed("no +-1 assignment makes d^2 = 0");
    }
    if (!verify_cfk_d_squared(c))
        throw DifferentialNotSquareZero("computed differential does not square to zero");

    return normalize_gradings(std::move(c));
}

KnotComplex normalize_gradings(KnotComplex c) {
    if (c.generators.empty()) throw NormalizationAmbiguous("empty complex");

    // Maslov: the arrows with n_w = 0 compute a complex whose homology must
    // be rank one; its surviving degree is declared zero.
    HomologySummary vert = arrows_homology(
        c, [](const KnotComplex::Arrow& a) { return a.n_w == 0; }, true);
    if (vert.total_rank() != 1)
        throw NormalizationAmbiguous("vertical homology has rank " +
                                     std::to_string(vert.total_rank()));
    int survivor_degree = 0;
    for (const auto& [key, r] : vert.free_ranks)
        if (r != 0) survivor_degree = key.second;
    for (auto& g : c.generators) g.maslov -= survivor_degree;

    // Alexander: shift so the graded Euler characteristic is symmetric.
    LaurentPolynomial chi;
    for (const auto& g : c.generators) chi.add_term(2 * g.alexander, g.maslov % 2 == 0 ? 1 : -1);
    // chi here is of the associated graded chain groups; it equals the
    // homology-level characteristic because homology preserves chi.
    if (chi.is_zero()) throw AsymmetricEuler("Euler characteristic vanishes");
    int lo = chi.min_doubled_exponent(), hi = chi.max_doubled_exponent();
    if ((lo + hi) % 4 != 0)
        throw AsymmetricEuler("no integer shift centres the Euler characteristic");
    int shift_doubled = -(lo + hi) / 2;
    if (!chi.shifted(shift_doubled).is_symmetric())
        throw AsymmetricEuler("Euler characteristic cannot be symmetrized");
    int shift = shift_doubled / 2;
    for (auto& g : c.generators) g.alexander += shift;

    c.normalized = true;
    return c;
}

HomologySummary hfk_hat(const KnotComplex& c) {
    return arrows_homology(
        c, [](const KnotComplex::Arrow& a) { return a.n_w == 0 && a.n_z == 0; }, false);
}

HomologySummary vertical_homology(const KnotComplex& c) {
    return arrows_homology(c, [](const KnotComplex::Arrow& a) { return a.n_w == 0; }, true);
}

HomologySummary horizontal_homology(const KnotComplex& c) {
    return arrows_homology(c, [](const KnotComplex::Arrow& a) { return a.n_z == 0; }, true);
}

std::string knot_complex_to_json(const KnotComplex& c) {
    nlohmann::json j;
    j["schema"] = "hfk11.knot_complex.v1";
    j["coefficients"] = c.coeffs == Coefficients::Mod2 ? "mod2" : "int";
    j["normalized"] = c.normalized;
    j["generators"] = nlohmann::json::array();
    for (int i = 0; i < static_cast<int>(c.generators.size()); ++i)
        j["generators"].push_back({{"id", i},
                                   {"alexander", c.generators[i].alexander},
                                   {"maslov", c.generators[i].maslov}});
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : c.arrows)
        j["arrows"].push_back({{"from", a.from},
                               {"to", a.to},
                               {"n_w", a.n_w},
                               {"n_z", a.n_z},
                               {"coefficient", a.coefficient}});
    return j.dump(2) + "\n";
}

KnotComplex knot_complex_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    KnotComplex c;
    try {
        c.coeffs = j.at("coefficients") == "int" ? Coefficients::Integer : Coefficients::Mod2;
        c.normalized = j.value("normalized", false);
        c.generators.resize(j.at("generators").size());
        for (const auto& g : j.at("generators")) {
            int id = g.at("id");
            c.generators.at(id) = {g.at("alexander"), g.at("maslov")};
        }
        for (const auto& a : j.at("arrows"))
            c.arrows.push_back({a.at("from"), a.at("to"), a.at("n_w"), a.at("n_z"),
                                a.value("coefficient", 1LL)});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad knot complex payload: ") + e.what());
    }
    return c;
}

}  // namespace hfk
