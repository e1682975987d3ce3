#pragma once

#include <string>
#include <vector>

#include "hfk11/bigraded.hpp"
#include "hfk11/diagram.hpp"

namespace hfk {

/// Finite model of the full knot complex: generators with their Alexander and
/// Maslov gradings, arrows labelled by basepoint multiplicities. An arrow
/// x -> y with (n_w, n_z) stands for the differential component
/// [x,i,j] -> [y, i-n_w, j-n_z]; the grading bookkeeping per arrow is
///   alexander(x) - alexander(y) = n_z - n_w,
///   maslov(x) - maslov(y) = 1 - 2 n_w.
struct KnotComplex {
    struct Generator {
        int alexander = 0;
        int maslov = 0;
    };
    struct Arrow {
        int from = 0;
        int to = 0;
        int n_w = 0;
        int n_z = 0;
        long long coefficient = 1;
    };

    Coefficients coeffs = Coefficients::Mod2;
    std::vector<Generator> generators;
    std::vector<Arrow> arrows;
    bool normalized = false;

    int alexander_spread() const;
};

/// Assemble the complex from a diagram: stabilized intersection points as
/// generators, nonnegative index-one classes as arrows, gradings integrated
/// from consecutive disk classes and then normalized.
KnotComplex cfk_from_diagram(const Diagram& d, Coefficients coeffs);

/// Shift gradings to absolute ones: Alexander by symmetrizing the graded
/// Euler characteristic, Maslov by placing the surviving vertical homology
/// class in degree zero.
KnotComplex normalize_gradings(KnotComplex c);

/// d^2 = 0 over the U-model (composite arrows grouped by endpoint and total
/// basepoint multiplicities).
bool verify_cfk_d_squared(const KnotComplex& c);

/// Homology of the subcomplex of arrows with n_w = n_z = 0, per (A, M).
HomologySummary hfk_hat(const KnotComplex& c);

/// Homology of the subcomplex of arrows with n_w = 0, graded by Maslov only;
/// keys are (0, maslov).
HomologySummary vertical_homology(const KnotComplex& c);

/// The mirror rule partner of vertical_homology (n_z = 0 arrows).
HomologySummary horizontal_homology(const KnotComplex& c);

std::string knot_complex_to_json(const KnotComplex& c);
KnotComplex knot_complex_from_json(const std::string& text);

}  // namespace hfk
