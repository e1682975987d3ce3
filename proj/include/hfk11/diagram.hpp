#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hfk11/errors.hpp"
#include "hfk11/geometry.hpp"
#include "hfk11/rational.hpp"

namespace hfk {

/// Closed PL curve on the flat torus R^2/Z^2, stored as one lift: the chain
/// runs v[0], v[1], ..., v[n-1], v[0] + period. The period is the homology
/// class of the loop.
struct PLLoop {
    std::vector<Point> vertices;
    std::pair<long, long> period{0, 0};

    Point period_point() const { return {Rational(period.first), Rational(period.second)}; }
    /// Segments of one fundamental piece (the last one closes up to v0 + period).
    std::vector<Segment> segments() const;
};

/// Doubly-pointed genus-one Heegaard diagram: two curves and two basepoints.
struct Diagram {
    PLLoop alpha;
    PLLoop beta;
    Point w;
    Point z;
};

struct Violation {
    ViolationCode code;
    std::string detail;
};

/// All invariant violations; empty means the diagram is valid.
std::vector<Violation> validate(const Diagram& d);

/// Parse the JSON interchange format; the result is validated.
/// Throws ParseError on malformed input, ValidationError on a bad diagram.
Diagram parse_diagram(const std::string& text);

/// Canonical JSON for a diagram (exact rationals as "p/q" strings).
std::string serialize_diagram(const Diagram& d);

/// Mirror image: negate every y coordinate and swap the two basepoints.
Diagram reflect_diagram(const Diagram& d);

/// Geometric intersection count of alpha and beta on the torus.
/// Only meaningful for valid diagrams.
int geometric_intersection_count(const Diagram& d);

}  // namespace hfk
