#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfk11/diagram.hpp"
#include "hfk11/geometry.hpp"

namespace hfk {

/// A Whitney-disk class between two intersection points of the lifted
/// curves. disk_class(a, x, y) is the class whose boundary runs along the
/// alpha lift from x to y and back along the beta lift; the differential
/// counts the classes x -> y whose domain is nonnegative with index one.
struct DiskClass {
    int from = 0;
    int to = 0;
    std::map<int, long> multiplicities;  // face index -> nonzero multiplicity
    long n_w = 0;
    long n_z = 0;
    int maslov = 0;
};

/// The planar picture: one lift of each curve truncated to a window, their
/// intersection points in alpha order, and the bounded faces of the
/// complement with basepoint lattice counts.
class Arrangement {
  public:
    struct CrossingPoint {
        Point pos;
        int sign = 0;            // orientation of (alpha dir, beta dir)
        Rational alpha_param;    // position along the alpha lift
        Rational beta_param;
        int quadrant_faces[4] = {-1, -1, -1, -1};  // -1 = unbounded
    };

    struct Face {
        Point sample;
        long w_count = 0;
        long z_count = 0;
    };

    int point_count() const { return static_cast<int>(points_.size()); }
    const std::vector<CrossingPoint>& points() const { return points_; }
    const std::vector<Face>& faces() const { return faces_; }
    int window_scale() const { return scale_; }

    DiskClass disk_class(int from, int to) const;

    /// Average of the four face multiplicities around intersection point p
    /// (Eq-style corner average).
    Rational corner_multiplicity(const DiskClass& c, int p) const;

    /// 2*(corner at from + corner at to); throws NonIntegralMaslov if the
    /// result is not an integer.
    int maslov_index(const DiskClass& c) const;

    /// All ordered pairs whose class has index one and nonnegative domain,
    /// sorted by (from, to).
    std::vector<DiskClass> positive_mu1_classes() const;

    std::string debug_json() const;

  private:
    friend Arrangement lift(const Diagram& d, int window_scale);

    std::vector<Point> boundary_loop(int from, int to) const;
    long lattice_count_in_loop(const std::vector<Point>& loop, const Point& base) const;
    int locate_face(const Point& p) const;

    Diagram diagram_;
    int scale_ = 1;
    std::vector<Point> alpha_chain_;
    std::vector<Point> beta_chain_;
    std::vector<CrossingPoint> points_;
    std::vector<Face> faces_;

    // trapezoid structure used for face location
    std::vector<Rational> slab_xs_;
    std::vector<std::vector<int>> slab_segments_;   // sorted spanning segment ids per slab
    std::vector<std::vector<int>> slab_gap_faces_;  // face id per gap, -1 = unbounded
    std::vector<Segment> segments_;
};

/// One lift of each curve over [-scale, scale] periods. Throws WindowTooSmall
/// when the truncated lifts do not intersect.
Arrangement lift(const Diagram& d, int window_scale);

/// Doubles the window until the point count and the positive index-one class
/// list stop changing. Throws StabilizationLimitExceeded after max_doublings.
Arrangement stabilize(const Diagram& d, int max_doublings = 8);

}  // namespace hfk
