#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hfk11/bigraded.hpp"

namespace hfk {

/// Basis element of the exterior-algebra-with-U module: a subset of the 2g
/// symplectic one-handle classes (bitmask, bit 2i = a_{i+1}, bit 2i+1 =
/// b_{i+1}) together with a U power. The summand index is i = 2g - |form|,
/// and the relative grading is -(i + 2 u_power), top generator at zero.
struct XgdModule {
    struct BasisElement {
        uint32_t form = 0;
        int u_power = 0;
    };
    int g = 0;
    int d = 0;
    std::vector<BasisElement> basis;

    int degree(int index) const;
    long long rank() const { return static_cast<long long>(basis.size()); }
    std::map<int, long long> ranks_by_degree() const;
};

/// A first-homology class as an integer vector in the symplectic basis.
/// The symplectic form is alternating, so gamma . gamma = 0 automatically and
/// the associated differential squares to zero.
struct GammaClass {
    std::vector<long long> coeffs;  // size 2g
};

XgdModule build_x(int g, int d);

/// Matrix of the contraction-plus-wedge differential in the canonical basis;
/// column k lists the image of basis element k.
std::vector<std::map<int, long long>> d_gamma(const XgdModule& x, const GammaClass& gamma);

/// The variant that kills the even part of the distinguished torus handle.
/// gamma must be a single basis class of that handle (a_1 or b_1); otherwise
/// GammaNotInHandle.
std::vector<std::map<int, long long>> d_gamma_prime(const XgdModule& x, const GammaClass& gamma);

/// Ranks by degree of X(g, g-1-|k|); empty when |k| > g-1. k must be nonzero.
std::map<int, long long> hf_sigma_times_s1(int g, int k);

struct DehnTwistResult {
    std::map<int, long long> ranks;       // homology of (X, D'_gamma) by degree
    bool module_structure_pinned = true;  // 3d < 2g-1 regime
};
DehnTwistResult hf_dehn_twist(int g, int k);

/// rank C(2g, g+j) at bigrading (j, j), j = -g..g.
HomologySummary borromean_hfk(int g);

/// Betti numbers of the d-fold symmetric product of a genus g surface from
/// the generating function (1+tq)^(2g) / ((1-q)(1-t^2 q)), reported in the
/// same normalization as the module degrees (top class at zero).
std::map<int, long long> macdonald_oracle(int g, int d);

}  // namespace hfk
