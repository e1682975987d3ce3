#pragma once

#include <optional>
#include <vector>

#include "hfk11/rational.hpp"

namespace hfk {

struct Segment {
    Point a;
    Point b;
};

enum class SegContact {
    None,
    Proper,   // interiors cross transversally in one point
    Touch,    // meet in one point involving an endpoint
    Overlap,  // collinear with a common sub-segment
};

struct SegIntersection {
    SegContact kind = SegContact::None;
    Point at;      // for Proper / Touch
    Rational t;    // parameter on the first segment, 0..1
    Rational u;    // parameter on the second
};

inline bool point_on_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    Rational lox = s.a.x < s.b.x ? s.a.x : s.b.x, hix = s.a.x < s.b.x ? s.b.x : s.a.x;
    Rational loy = s.a.y < s.b.y ? s.a.y : s.b.y, hiy = s.a.y < s.b.y ? s.b.y : s.a.y;
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

inline SegIntersection intersect_segments(const Segment& s, const Segment& t) {
    SegIntersection out;
    Point r = s.b - s.a, q = t.b - t.a;
    Rational denom = cross(r, q);
    if (denom != 0) {
        Rational tt = cross(t.a - s.a, q) / denom;
        Rational uu = cross(t.a - s.a, r) / denom;
        if (tt < 0 || tt > 1 || uu < 0 || uu > 1) return out;
        out.at = s.a + scale(tt, r);
        out.t = tt;
        out.u = uu;
        bool interior = tt > 0 && tt < 1 && uu > 0 && uu < 1;
        out.kind = interior ? SegContact::Proper : SegContact::Touch;
        return out;
    }
    if (orient(s.a, s.b, t.a) != 0) return out;  // parallel, distinct lines
    // collinear: compare parameter intervals along r
    Rational rr = r.x * r.x + r.y * r.y;
    auto param = [&](const Point& p) { return ((p.x - s.a.x) * r.x + (p.y - s.a.y) * r.y) / rr;};
    Rational u0 = param(t.a), u1 = param(t.b);
    if (u0 > u1) std::swap(u0, u1);
    Rational lo = u0 > 0 ? u0 : Rational(0);
    Rational hi = u1 < 1 ? u1 : Rational(1);
    if (lo > hi) return out;
    if (lo == hi) {
        out.kind = SegContact::Touch;
        out.at = s.a + scale(lo, r);
        out.t = lo;
        return out;
    }
    out.kind = SegContact::Overlap;
    return out;
}

/// Winding number of the closed polyline `loop` (consecutive vertices joined,
/// last joined to first) around `p`, which must not lie on the polyline.
inline long winding_number(const std::vector<Point>& loop, const Point& p) {
    long w = 0;
    size_t n = loop.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = loop[i];
        const Point& b = loop[(i + 1) % n];
        if (a.y <= p.y && p.y < b.y && orient(a, b, p) > 0) ++w;
        else if (b.y <= p.y && p.y < a.y && orient(a, b, p) < 0) --w;
    }
    return w;
}

struct BBox {
    Rational lox, loy, hix, hiy;
    bool overlaps(const BBox& o) const {
        return lox <= o.hix && o.lox <= hix && loy <= o.hiy && o.loy <= hiy;
    }
};

inline BBox segment_bbox(const Segment& s) {
    return {s.a.x < s.b.x ? s.a.x : s.b.x, s.a.y < s.b.y ? s.a.y : s.b.y,
            s.a.x < s.b.x ? s.b.x : s.a.x, s.a.y < s.b.y ? s.b.y : s.a.y};
}

}  // namespace hfk
