#include "hfk11/diagram.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>

namespace hfk {

std::string to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::SelfIntersecting: return "SelfIntersecting";
        case ViolationCode::NotTransverse: return "NotTransverse";
        case ViolationCode::BasepointOnCurve: return "BasepointOnCurve";
        case ViolationCode::IntersectionNumberNotUnit: return "IntersectionNumberNotUnit";
        case ViolationCode::NullHomotopicCurve: return "NullHomotopicCurve";
        case ViolationCode::DuplicateBasepoint: return "DuplicateBasepoint";
    }
    return "?";
}

std::vector<Segment> PLLoop::segments() const {
    std::vector<Segment> segs;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) segs.push_back({vertices[i], vertices[i + 1]});
    if (!vertices.empty()) segs.push_back({vertices.back(), vertices.front() + period_point()});
    return segs;
}

namespace {

/// Calls fn(offset) for every integer lattice offset that brings bbox `mobile`
/// into contact with bbox `fixed`.
void for_each_offset(const BBox& fixed, const BBox& mobile,
                     const std::function<void(const Point&)>& fn) {
    BigInt x0 = floor_div(fixed.lox - mobile.hix);
    if (Rational(x0) < fixed.lox - mobile.hix) x0 += 1;
    BigInt x1 = floor_div(fixed.hix - mobile.lox);
    BigInt y0 = floor_div(fixed.loy - mobile.hiy);
    if (Rational(y0) < fixed.loy - mobile.hiy) y0 += 1;
    BigInt y1 = floor_div(fixed.hiy - mobile.loy);
    for (BigInt x = x0; x <= x1; ++x)
        for (BigInt y = y0; y <= y1; ++y) fn(Point{Rational(x), Rational(y)});
}

bool is_multiple_of_period(const Point& offset, const std::pair<long, long>& period, long& m_out) {
    Rational px(period.first), py(period.second);
    if (px != 0) {
        Rational m = offset.x / px;
        if (boost::multiprecision::denominator(m) != 1) return false;
        if (offset.y != m * py) return false;
        m_out = static_cast<long>(boost::multiprecision::numerator(m));
        return true;
    }
    if (py != 0) {
        if (offset.x != 0) return false;
        Rational m = offset.y / py;
        if (boost::multiprecision::denominator(m) != 1) return false;
        m_out = static_cast<long>(boost::multiprecision::numerator(m));
        return true;
    }
    return false;
}

void check_loop(const PLLoop& loop, const char* name, std::vector<Violation>& out) {
    if (loop.vertices.empty()) {
        out.push_back({ViolationCode::NullHomotopicCurve, std::string(name) + " has no vertices"});
        return;
    }
    if (loop.period == std::make_pair(0L, 0L)) {
        out.push_back({ViolationCode::NullHomotopicCurve, std::string(name) + " has period (0,0)"});
        return;
    }
    auto segs = loop.segments();
    int n = static_cast<int>(segs.size());
    for (int i = 0; i < n; ++i)
        if (segs[i].a == segs[i].b) {
            out.push_back({ViolationCode::SelfIntersecting,
                           std::string(name) + ": repeated consecutive vertex"});
            return;
        }

    // Embeddedness on the torus: a segment may meet a lattice translate of
    // another (or of itself) only when the two are consecutive in the lifted
    // chain, and then only at the shared vertex.
    for (int i = 0; i < n; ++i) {
        BBox bi = segment_bbox(segs[i]);
        for (int j = i; j < n; ++j) {
            BBox bj = segment_bbox(segs[j]);
            for_each_offset(bi, bj, [&](const Point& off) {
                if (i == j && off.x == 0 && off.y == 0) return;
                Segment t{segs[j].a + off, segs[j].b + off};
                auto hit = intersect_segments(segs[i], t);
                if (hit.kind == SegContact::None) return;
                long m = 0;
                bool adjacent = false;
                Point shared;
                if (is_multiple_of_period(off, loop.period, m)) {
                    long chain_delta = (j + m * n) - i;
                    if (chain_delta == 1 || chain_delta == -1) {
                        adjacent = true;
                        shared = chain_delta == 1 ? segs[i].b : segs[i].a;
                    }
                }
                if (adjacent && hit.kind == SegContact::Touch && hit.at == shared) return;
                out.push_back({ViolationCode::SelfIntersecting,
                               std::string(name) + ": segments " + std::to_string(i) + " and " +
                                   std::to_string(j) + " collide on the torus"});
            });
        }
    }
}

void check_point_off_loop(const Point& p, const PLLoop& loop, const char* pname, const char* lname,
                          std::vector<Violation>& out) {
    for (const auto& s : loop.segments()) {
        BBox bs = segment_bbox(s);
        BBox bp{p.x, p.y, p.x, p.y};
        for_each_offset(bs, bp, [&](const Point& off) {
            if (point_on_segment(p + off, s))
                out.push_back({ViolationCode::BasepointOnCurve,
                               std::string(pname) + " lies on " + lname});
        });
    }
}

int count_crossings(const Diagram& d, std::vector<Violation>* out) {
    int count = 0;
    auto asegs = d.alpha.segments();
    auto bsegs = d.beta.segments();
    for (const auto& sa : asegs) {
        BBox ba = segment_bbox(sa);
        for (const auto& sb : bsegs) {
            BBox bb = segment_bbox(sb);
            for_each_offset(ba, bb, [&](const Point& off) {
                Segment t{sb.a + off, sb.b + off};
                auto hit = intersect_segments(sa, t);
                if (hit.kind == SegContact::Proper) {
                    ++count;
                } else if (hit.kind != SegContact::None && out) {
                    out->push_back({ViolationCode::NotTransverse,
                                    "alpha and beta meet non-transversely (vertex touch or overlap)"});
                }
            });
        }
    }
    return count;
}

}  // namespace

std::vector<Violation> validate(const Diagram& d) {
    std::vector<Violation> out;
    check_loop(d.alpha, "alpha", out);
    check_loop(d.beta, "beta", out);
    if (!out.empty()) return out;

    long det = d.alpha.period.first * d.beta.period.second -
               d.alpha.period.second * d.beta.period.first;
    if (det != 1 && det != -1)
        out.push_back({ViolationCode::IntersectionNumberNotUnit,
                       "alpha.beta = " + std::to_string(det)});

    count_crossings(d, &out);

    if (frac_part(d.w.x) == frac_part(d.z.x) && frac_part(d.w.y) == frac_part(d.z.y))
        out.push_back({ViolationCode::DuplicateBasepoint, "w and z coincide on the torus"});
    check_point_off_loop(d.w, d.alpha, "w", "alpha", out);
    check_point_off_loop(d.w, d.beta, "w", "beta", out);
    check_point_off_loop(d.z, d.alpha, "z", "alpha", out);
    check_point_off_loop(d.z, d.beta, "z", "beta", out);
    return out;
}

int geometric_intersection_count(const Diagram& d) { return count_crossings(d, nullptr); }

Diagram reflect_diagram(const Diagram& d) {
    Diagram m = d;
    auto flip_loop = [](PLLoop& l) {
        for (auto& v : l.vertices) v.y = -v.y;
        l.period.second = -l.period.second;
    };
    flip_loop(m.alpha);
    flip_loop(m.beta);
    m.w = {d.z.x, -d.z.y};
    m.z = {d.w.x, -d.w.y};
    return m;
}

namespace {

Point parse_point(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("expected a point as a pair of rational strings");
    try {
        return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

PLLoop parse_loop(const nlohmann::json& j, const nlohmann::json& period) {
    PLLoop loop;
    if (!j.is_array() || j.empty()) throw ParseError("curve must be a nonempty array of points");
    for (const auto& p : j) loop.vertices.push_back(parse_point(p));
    if (!period.is_array() || period.size() != 2 || !period[0].is_number_integer() ||
        !period[1].is_number_integer())
        throw ParseError("period must be a pair of integers");
    loop.period = {period[0].get<long>(), period[1].get<long>()};
    return loop;
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    for (const char* key : {"alpha", "alpha_period", "beta", "beta_period", "w", "z"})
        if (!j.contains(key)) throw ParseError(std::string("missing key: ") + key);
    Diagram d;
    d.alpha = parse_loop(j["alpha"], j["alpha_period"]);
    d.beta = parse_loop(j["beta"], j["beta_period"]);
    d.w = parse_point(j["w"]);
    d.z = parse_point(j["z"]);
    auto violations = validate(d);
    if (!violations.empty())
        throw ValidationError(violations.front().code, violations.front().detail);
    return d;
}

std::string serialize_diagram(const Diagram& d) {
    nlohmann::json j;
    auto point_json = [](const Point& p) {
        return nlohmann::json::array({rational_string(p.x), rational_string(p.y)});
    };
    auto loop_json = [&](const PLLoop& l) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : l.vertices) arr.push_back(point_json(v));
        return arr;
    };
    j["alpha"] = loop_json(d.alpha);
    j["alpha_period"] = {d.alpha.period.first, d.alpha.period.second};
    j["beta"] = loop_json(d.beta);
    j["beta_period"] = {d.beta.period.first, d.beta.period.second};
    j["w"] = point_json(d.w);
    j["z"] = point_json(d.z);
    return j.dump(2) + "\n";
}

}  // namespace hfk
