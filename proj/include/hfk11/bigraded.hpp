#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hfk11/laurent.hpp"
#include "hfk11/rational.hpp"

namespace hfk {

enum class Coefficients { Mod2, Integer };

/// Finitely generated bigraded chain complex. Arrows drop the Maslov grading
/// by exactly one and preserve the Alexander grading; the differential is the
/// sum of the arrows.
struct BigradedComplex {
    struct Generator {
        std::string id;
        int alexander = 0;
        int maslov = 0;
    };
    struct Arrow {
        int from = 0;
        int to = 0;
        long long coefficient = 1;
    };

    Coefficients coeffs = Coefficients::Mod2;
    std::vector<Generator> generators;
    std::vector<Arrow> arrows;
};

struct TorsionSummand {
    int alexander = 0;
    int maslov = 0;
    BigInt order;
};

struct Tower {
    int alexander = 0;
    /// Maslov grading of the U^0 end of the tower (the bottom for quotient
    /// regions, where the tower climbs by U^-1; the top for subcomplex
    /// regions, where it descends by U).
    int base_maslov = 0;
    friend bool operator==(const Tower&, const Tower&) = default;
};

/// Ranks of a homology computation, indexed by (alexander, maslov).
struct HomologySummary {
    std::map<std::pair<int, int>, long long> free_ranks;
    std::vector<TorsionSummand> torsion;  // Integer mode only
    std::vector<Tower> towers;            // region computations only

    long long rank(int alexander, int maslov) const;
    long long total_rank() const;
    void add_rank(int alexander, int maslov, long long r);
    bool same_free_ranks(const HomologySummary& other) const;
};

/// True iff the composite differential vanishes over the complex's ring.
bool verify_d_squared(const BigradedComplex& c);

/// Homology ranks per bigrading; torsion summands in Integer mode.
/// Throws DifferentialNotSquareZero when d*d != 0, std::invalid_argument when
/// an arrow violates the grading constraints.
HomologySummary homology(const BigradedComplex& c);

/// Chain-level tensor product: gradings add, differential by the graded
/// Leibniz rule (Koszul sign in Integer mode).
BigradedComplex tensor_complex(const BigradedComplex& a, const BigradedComplex& b);

/// Graded Euler characteristic: coefficient of T^a is sum over m of
/// (-1)^m rank(a, m). Requires an empty tower list.
LaurentPolynomial euler_characteristic(const HomologySummary& h);

}  // namespace hfk
