#include "hfk11/fibered.hpp"

#include <bit>
#include <stdexcept>

#include "hfk11/errors.hpp"
#include "hfk11/linalg.hpp"

namespace hfk {

namespace {

int popcount(uint32_t m) { return std::popcount(m); }

/// Sign of inserting e_k in front of the wedge `form`: parity of the set
/// bits below k.
int insertion_sign(uint32_t form, int k) {
    uint32_t below = form & ((1u << k) - 1);
    return popcount(below) % 2 == 0 ? 1 : -1;
}

/// Symplectic pairing functional f_gamma(e_j) = Omega(gamma, e_j), with
/// Omega(a_i, b_i) = 1.
long long pairing(const GammaClass& gamma, int j) {
    if (j % 2 == 0) return -gamma.coeffs[j + 1];  // Omega(b, a) = -1
    return gamma.coeffs[j - 1];
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

int XgdModule::degree(int index) const {
    const auto& b = basis[index];
    int i = 2 * g - popcount(b.form);
    return -(i + 2 * b.u_power);
}

std::map<int, long long> XgdModule::ranks_by_degree() const {
    std::map<int, long long> out;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) out[degree(k)]++;
    return out;
}

XgdModule build_x(int g, int d) {
    if (g < 0 || d < 0) throw std::invalid_argument("build_x: g and d must be nonnegative");
    XgdModule x;
    x.g = g;
    x.d = d;
    for (int i = 0; i <= d; ++i) {
        int form_size = 2 * g - i;
        if (form_size < 0) continue;
        for (uint32_t mask = 0; mask < (1u << (2 * g)); ++mask) {
            if (popcount(mask) != form_size) continue;
            for (int u = 0; u <= d - i; ++u) x.basis.push_back({mask, u});
        }
    }
    // sanity: rank formula sum_i C(2g, i) (d - i + 1)
    long long expect = 0;
    for (int i = 0; i <= std::min(d, 2 * g); ++i) expect += binomial(2 * g, i) * (d - i + 1);
    if (expect != x.rank()) throw Error("build_x: rank bookkeeping broken");
    return x;
}

std::vector<std::map<int, long long>> d_gamma(const XgdModule& x, const GammaClass& gamma) {
    if (static_cast<int>(gamma.coeffs.size()) != 2 * x.g)
        throw std::invalid_argument("gamma has the wrong number of coefficients");
    std::map<std::pair<uint32_t, int>, int> index;
    for (int k = 0; k < static_cast<int>(x.basis.size()); ++k)
        index[{x.basis[k].form, x.basis[k].u_power}] = k;

    std::vector<std::map<int, long long>> cols(x.basis.size());
    for (int k = 0; k < static_cast<int>(x.basis.size()); ++k) {
        uint32_t form = x.basis[k].form;
        int u = x.basis[k].u_power;
        // contraction: remove one factor, same U power (dropped when the
        // target summand is truncated away)
        for (int j = 0; j < 2 * x.g; ++j) {
            if (!(form & (1u << j))) continue;
            long long f = pairing(gamma, j);
            if (!f) continue;
            auto it = index.find({form & ~(1u << j), u});
            if (it == index.end()) continue;
            cols[k][it->second] += insertion_sign(form, j) * f;
        }
        // wedge: add one factor, U power up by one
        for (int j = 0; j < 2 * x.g; ++j) {
            if (form & (1u << j)) continue;
            long long f = gamma.coeffs[j];
            if (!f) continue;
            auto it = index.find({form | (1u << j), u + 1});
            if (it == index.end()) continue;
            cols[k][it->second] += insertion_sign(form, j) * f;
        }
        std::erase_if(cols[k], [](const auto& kv) { return kv.second == 0; });
    }
    return cols;
}

std::vector<std::map<int, long long>> d_gamma_prime(const XgdModule& x, const GammaClass& gamma) {
    if (static_cast<int>(gamma.coeffs.size()) != 2 * x.g)
        throw std::invalid_argument("gamma has the wrong number of coefficients");
    int unit = -1;
    for (int j = 0; j < 2 * x.g; ++j) {
        if (gamma.coeffs[j] == 0) continue;
        if (unit >= 0 || gamma.coeffs[j] != 1 || j > 1)
            throw GammaNotInHandle("gamma must be a single basis class of the first handle");
        unit = j;
    }
    if (unit < 0) throw GammaNotInHandle("gamma vanishes");

    auto cols = d_gamma(x, gamma);
    // kill the differential on the even part of the distinguished handle
    for (int k = 0; k < static_cast<int>(x.basis.size()); ++k) {
        int handle_bits = popcount(x.basis[k].form & 3u);
        if (handle_bits % 2 == 0) cols[k].clear();
    }
    return cols;
}

namespace {

std::map<int, long long> matrix_homology_ranks(const XgdModule& x,
                                               const std::vector<std::map<int, long long>>& cols) {
    using F = linalg::FQ;
    // rank of d per source degree; homology rank at degree d is
    // dim_d - rank(d at d) - rank(d at d+1)
    std::map<int, std::vector<linalg::SparseVec<F>>> by_degree;
    std::map<int, long long> dim;
    for (int k = 0; k < static_cast<int>(x.basis.size()); ++k) {
        dim[x.degree(k)]++;
        linalg::SparseVec<F> v;
        for (const auto& [t, c] : cols[k]) v.emplace_back(t, Rational(c));
        by_degree[x.degree(k)].push_back(std::move(v));
    }
    std::map<int, int> rank_at;
    for (const auto& [d, vecs] : by_degree) rank_at[d] = linalg::rank<F>(vecs);
    std::map<int, long long> out;
    for (const auto& [d, n] : dim) {
        long long r = n - rank_at[d] - (rank_at.count(d + 1) ? rank_at[d + 1] : 0);
        if (r) out[d] = r;
    }
    return out;
}

}  // namespace

std::map<int, long long> hf_sigma_times_s1(int g, int k) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    int d = g - 1 - std::abs(k);
    if (d < 0) return {};
    return build_x(g, d).ranks_by_degree();
}

DehnTwistResult hf_dehn_twist(int g, int k) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    DehnTwistResult out;
    int d = g - 1 - std::abs(k);
    if (d < 0) return out;
    out.module_structure_pinned = 3 * d < 2 * g - 1;
    XgdModule x = build_x(g, d);
    GammaClass gamma;
    gamma.coeffs.assign(2 * g, 0);
    gamma.coeffs[0] = 1;  // a_1
    out.ranks = matrix_homology_ranks(x, d_gamma_prime(x, gamma));
    return out;
}

HomologySummary borromean_hfk(int g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    HomologySummary h;
    for (int j = -g; j <= g; ++j) h.add_rank(j, j, binomial(2 * g, g + j));
    return h;
}

std::map<int, long long> macdonald_oracle(int g, int d) {
    // coefficient of q^d in (1+tq)^(2g) / ((1-q)(1-t^2 q)), as a polynomial
    // in t; then re-grade so the top class sits at degree zero.
    std::vector<long long> poly(2 * d + 1, 0);  // t-degree -> coefficient
    // (1+tq)^(2g) contributes C(2g, a) t^a q^a;
    // 1/(1-q) contributes q^b; 1/(1-t^2 q) contributes t^(2c) q^c.
    for (int a = 0; a <= std::min(d, 2 * g); ++a)
        for (int c = 0; a + c <= d; ++c) {
            int tdeg = a + 2 * c;
            if (tdeg <= 2 * d) poly[tdeg] += binomial(2 * g, a);
        }
    std::map<int, long long> out;
    for (int tdeg = 0; tdeg <= 2 * d; ++tdeg)
        if (poly[tdeg]) out[tdeg - 2 * d] = poly[tdeg];
    return out;
}

}  // namespace hfk
