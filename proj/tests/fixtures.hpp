#pragma once

#include <array>
#include <vector>

#include "hfk11/bigraded.hpp"
#include "hfk11/knot_complex.hpp"

namespace fixtures {

/// The published nine-generator complex for the two-bridge example, with the
/// twelve arrows and their basepoint multiplicities. Gradings are the
/// absolute ones (vertical survivor in degree zero).
inline hfk::KnotComplex nine_forty_two() {
    hfk::KnotComplex c;
    c.coeffs = hfk::Coefficients::Mod2;
    const std::array<std::pair<int, int>, 9> gens = {{{-1, 0},
                                                      {0, 1},
                                                      {-1, 0},
                                                      {-2, -1},
                                                      {0, 0},
                                                      {2, 3},
                                                      {1, 2},
                                                      {0, 1},
                                                      {1, 2}}};
    for (const auto& [a, m] : gens) c.generators.push_back({a, m});
    const std::array<std::array<int, 4>, 12> arrows = {{{0, 1, 1, 0},
                                                        {0, 3, 0, 1},
                                                        {1, 2, 0, 1},
                                                        {3, 2, 1, 0},
                                                        {4, 1, 1, 1},
                                                        {4, 3, 0, 2},
                                                        {4, 5, 2, 0},
                                                        {4, 7, 1, 1},
                                                        {5, 6, 0, 1},
                                                        {7, 6, 1, 0},
                                                        {8, 5, 1, 0},
                                                        {8, 7, 0, 1}}};
    for (const auto& [f, t, w, z] : arrows) c.arrows.push_back({f, t, w, z, 1});
    c.normalized = true;
    return c;
}

inline hfk::HomologySummary ranks(std::initializer_list<std::tuple<int, int, long long>> rs) {
    hfk::HomologySummary h;
    for (const auto& [a, m, r] : rs) h.add_rank(a, m, r);
    return h;
}

}  // namespace fixtures
