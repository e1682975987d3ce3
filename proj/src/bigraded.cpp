#include "hfk11/bigraded.hpp"

#include <algorithm>
#include <stdexcept>

#include "hfk11/errors.hpp"
#include "hfk11/linalg.hpp"

namespace hfk {

long long HomologySummary::rank(int alexander, int maslov) const {
    auto it = free_ranks.find({alexander, maslov});
    return it == free_ranks.end() ? 0 : it->second;
}

long long HomologySummary::total_rank() const {
    long long t = 0;
    for (const auto& [k, r] : free_ranks) t += r;
    return t;
}

void HomologySummary::add_rank(int alexander, int maslov, long long r) {
    if (!r) return;
    auto key = std::make_pair(alexander, maslov);
    free_ranks[key] += r;
    if (free_ranks[key] == 0) free_ranks.erase(key);
}

bool HomologySummary::same_free_ranks(const HomologySummary& other) const {
    return free_ranks == other.free_ranks;
}

namespace {

void check_arrow_gradings(const BigradedComplex& c) {
    for (const auto& a : c.arrows) {
        const auto& f = c.generators.at(a.from);
        const auto& t = c.generators.at(a.to);
        if (f.alexander != t.alexander)
            throw std::invalid_argument("arrow changes alexander grading: " + f.id + " -> " + t.id);
        if (f.maslov != t.maslov + 1)
            throw std::invalid_argument("arrow does not drop maslov by 1: " + f.id + " -> " + t.id);
    }
}

}  // namespace

bool verify_d_squared(const BigradedComplex& c) {
    std::vector<std::vector<std::pair<int, long long>>> out(c.generators.size());
    for (const auto& a : c.arrows) out[a.from].emplace_back(a.to, a.coefficient);
    for (size_t x = 0; x < out.size(); ++x) {
        std::map<int, long long> composite;
        for (const auto& [y, cy] : out[x])
            for (const auto& [z, cz] : out[y]) composite[z] += cy * cz;
        for (const auto& [z, v] : composite) {
            if (c.coeffs == Coefficients::Mod2 ? (v % 2 != 0) : (v != 0)) return false;
        }
    }
    return true;
}

HomologySummary homology(const BigradedComplex& c) {
    check_arrow_gradings(c);
    if (!verify_d_squared(c)) throw DifferentialNotSquareZero("homology: d^2 != 0");

    // Split by bigrading: the differential maps (a, m) to (a, m-1).
    std::map<std::pair<int, int>, std::vector<int>> block;
    for (int i = 0; i < static_cast<int>(c.generators.size()); ++i)
        block[{c.generators[i].alexander, c.generators[i].maslov}].push_back(i);

    std::map<int, int> position;  // generator -> index inside its block
    for (const auto& [key, gens] : block)
        for (int k = 0; k < static_cast<int>(gens.size()); ++k) position[gens[k]] = k;

    // Columns of d per source bigrading.
    std::map<std::pair<int, int>, std::vector<std::map<int, long long>>> cols;
    for (const auto& [key, gens] : block) cols[key].resize(gens.size());
    for (const auto& a : c.arrows) {
        const auto& f = c.generators[a.from];
        cols[{f.alexander, f.maslov}][position[a.from]][position[a.to]] += a.coefficient;
    }

    HomologySummary h;
    for (const auto& [key, gens] : block) {
        auto [alex, mas] = key;
        auto reduce_mod = [&](long long v) { return c.coeffs == Coefficients::Mod2 ? ((v % 2 + 2) % 2) : v; };

        auto block_rank = [&](std::pair<int, int> src) -> int {
            auto it = cols.find(src);
            if (it == cols.end()) return 0;
            if (c.coeffs == Coefficients::Mod2) {
                std::vector<linalg::SparseVec<linalg::F2>> rows;
                for (const auto& col : it->second) {
                    linalg::SparseVec<linalg::F2> r;
                    for (const auto& [i, v] : col)
                        if (reduce_mod(v)) r.emplace_back(i, 1);
                    rows.push_back(std::move(r));
                }
                return linalg::rank<linalg::F2>(rows);
            }
            std::vector<linalg::SparseVec<linalg::FQ>> rows;
            for (const auto& col : it->second) {
                linalg::SparseVec<linalg::FQ> r;
                for (const auto& [i, v] : col)
                    if (v) r.emplace_back(i, Rational(v));
                rows.push_back(std::move(r));
            }
            return linalg::rank<linalg::FQ>(rows);
        };

        int n = static_cast<int>(gens.size());
        int rank_out = block_rank(key);
        int rank_in = block_rank({alex, mas + 1});
        h.add_rank(alex, mas, n - rank_out - rank_in);

        if (c.coeffs == Coefficients::Integer) {
            // Torsion of H_(a,m) comes from the Smith form of d landing here.
            auto it = cols.find(std::make_pair(alex, mas + 1));
            if (it != cols.end() && !it->second.empty() && n > 0) {
                std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(it->second.size(), 0));
                for (size_t j = 0; j < it->second.size(); ++j)
                    for (const auto& [i, v] : it->second[j]) m[i][j] = v;
                for (const auto& d : linalg::smith_diagonal(std::move(m)))
                    if (d > 1) h.torsion.push_back({alex, mas, d});
            }
        }
    }
    return h;
}

BigradedComplex tensor_complex(const BigradedComplex& a, const BigradedComplex& b) {
    BigradedComplex out;
    out.coeffs = a.coeffs;
    auto index = [&](int i, int j) { return i * static_cast<int>(b.generators.size()) + j; };
    for (const auto& ga : a.generators)
        for (const auto& gb : b.generators)
            out.generators.push_back({"(" + ga.id + ")x(" + gb.id + ")",
                                      ga.alexander + gb.alexander, ga.maslov + gb.maslov});
    for (const auto& ar : a.arrows)
        for (int j = 0; j < static_cast<int>(b.generators.size()); ++j)
            out.arrows.push_back({index(ar.from, j), index(ar.to, j), ar.coefficient});
    for (const auto& br : b.arrows)
        for (int i = 0; i < static_cast<int>(a.generators.size()); ++i) {
            long long sign = 1;
            if (out.coeffs == Coefficients::Integer && (a.generators[i].maslov % 2 != 0)) sign = -1;
            out.arrows.push_back({index(i, br.from), index(i, br.to), sign * br.coefficient});
        }
    return out;
}

LaurentPolynomial euler_characteristic(const HomologySummary& h) {
    if (!h.towers.empty())
        throw std::invalid_argument("euler characteristic undefined with towers present");
    LaurentPolynomial chi;
    for (const auto& [key, r] : h.free_ranks) {
        auto [alex, mas] = key;
        chi.add_term(2 * alex, (mas % 2 == 0) ? r : -r);
    }
    return chi;
}

}  // namespace hfk
