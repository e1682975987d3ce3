#pragma once

#include <vector>

#include "hfk11/knot_complex.hpp"
#include "hfk11/laurent.hpp"

namespace hfk {

/// Regions of the (i, j) filtration plane. Subcomplex regions are downward
/// closed, quotient regions upward closed; Box is the intersection of one of
/// each. All of them therefore carry induced differentials.
enum class RegionKind {
    MaxNeg,         // max(i,j) < 0        (subcomplex, U-tails descend)
    MinNeg,         // min(i,j) < 0        (subcomplex)
    QuotMinNonneg,  // min(i,j) >= 0       (quotient, U-tails climb)
    QuotMaxNonneg,  // max(i,j) >= 0       (quotient)
    IOrJ,           // i >= 0 or j >= -m   (quotient)
    IAndJ,          // i >= 0 and j >= -m  (quotient)
    Box,            // i < 0 and j >= t    (finite)
};

struct RegionSpec {
    RegionKind kind = RegionKind::IAndJ;
    long m = 0;  // parameter for IOrJ / IAndJ
    long t = 0;  // parameter for Box

    bool contains(long i, long j) const;
    /// +1 quotient-type (towers extend up), -1 subcomplex-type, 0 finite.
    int direction() const;
    long parameter() const;
};

struct TowerSummary {
    std::vector<Tower> towers;
    HomologySummary reduced;  // keyed (region parameter, maslov)
};

/// Homology of the region complex instantiated within |i| <= truncation.
/// Infinite U-tails are classified as towers by comparing two consecutive
/// truncation depths; disagreement raises TruncationUnstable.
TowerSummary region_homology(const KnotComplex& c, const RegionSpec& region, long truncation);

long default_truncation(const KnotComplex& c, const RegionSpec& region);

/// Symmetrized Euler characteristic of the hat homology. Checks symmetry and
/// |value at 1| = 1; failure raises NotAKnotPolynomial.
LaurentPolynomial alexander_polynomial(const HomologySummary& hat_groups);

/// Largest |A| supporting the hat homology.
int genus_lower_bound(const HomologySummary& hat_groups);

/// Chain-level tensor product in the U-model (Kunneth principle).
KnotComplex connected_sum(const KnotComplex& a, const KnotComplex& b);

/// The two graded Euler characteristic skein relations. With
/// merges_components set (the resolved link has one more component than the
/// crossing-changed ones): chi(-) - chi(0) - chi(+) = 0; otherwise
/// chi(-) - (T^(1/2) - T^(-1/2))^2 chi(0) - chi(+) = 0.
bool skein_chi_check(const LaurentPolynomial& chi_minus, const LaurentPolynomial& chi_zero,
                     const LaurentPolynomial& chi_plus, bool merges_components);

}  // namespace hfk
