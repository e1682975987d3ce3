#include "hfk11/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hfk11/errors.hpp"
#include "hfk11/linalg.hpp"

namespace hfk {

bool RegionSpec::contains(long i, long j) const {
    switch (kind) {
        case RegionKind::MaxNeg: return std::max(i, j) < 0;
        case RegionKind::MinNeg: return std::min(i, j) < 0;
        case RegionKind::QuotMinNonneg: return std::min(i, j) >= 0;
        case RegionKind::QuotMaxNonneg: return std::max(i, j) >= 0;
        case RegionKind::IOrJ: return i >= 0 || j >= -m;
        case RegionKind::IAndJ: return i >= 0 && j >= -m;
        case RegionKind::Box: return i < 0 && j >= t;
    }
    return false;
}

int RegionSpec::direction() const {
    switch (kind) {
        case RegionKind::MaxNeg:
        case RegionKind::MinNeg: return -1;
        case RegionKind::Box: return 0;
        default: return 1;
    }
}

long RegionSpec::parameter() const { return kind == RegionKind::Box ? t : m; }

long default_truncation(const KnotComplex& c, const RegionSpec& region) {
    return static_cast<long>(c.generators.size()) + c.alexander_spread() +
           std::labs(region.parameter()) + 4;
}

namespace {

/// Region complex at one truncation depth: cells (x, i) with their Maslov
/// degrees, the induced differential, and the partial U-action.
struct RegionComplex {
    std::vector<int> degree;
    std::vector<std::vector<std::pair<int, long long>>> diff;  // column per cell
    std::vector<int> u_target;                                 // -1 where U exits
};

RegionComplex build_region(const KnotComplex& c, const RegionSpec& region, long depth) {
    RegionComplex rc;
    std::map<std::pair<int, long>, int> index;
    for (int x = 0; x < static_cast<int>(c.generators.size()); ++x) {
        long a = c.generators[x].alexander;
        for (long i = -depth; i <= depth; ++i) {
            if (!region.contains(i, i + a)) continue;
            index[{x, i}] = static_cast<int>(rc.degree.size());
            rc.degree.push_back(c.generators[x].maslov + 2 * static_cast<int>(i));
        }
    }
    rc.diff.resize(rc.degree.size());
    rc.u_target.assign(rc.degree.size(), -1);
    for (const auto& [key, id] : index) {
        auto u = index.find({key.first, key.second - 1});
        if (u != index.end()) rc.u_target[id] = u->second;
    }
    for (const auto& a : c.arrows) {
        for (long i = -depth; i <= depth; ++i) {
            auto s = index.find({a.from, i});
            if (s == index.end()) continue;
            auto t = index.find({a.to, i - a.n_w});
            if (t == index.end()) continue;
            rc.diff[s->second].emplace_back(t->second, a.coefficient);
        }
    }
    for (auto& col : rc.diff) std::sort(col.begin(), col.end());
    return rc;
}

/// Flip to the opposite complex (transposed differential and U, negated
/// degrees); turns descending U-tails into ascending ones.
void reverse_region(RegionComplex& rc) {
    size_t n = rc.degree.size();
    std::vector<std::vector<std::pair<int, long long>>> rdiff(n);
    std::vector<int> ru(n, -1);
    for (size_t i = 0; i < n; ++i) {
        for (const auto& [t, v] : rc.diff[i]) rdiff[t].emplace_back(static_cast<int>(i), v);
        if (rc.u_target[i] >= 0) ru[rc.u_target[i]] = static_cast<int>(i);
    }
    for (auto& col : rdiff) std::sort(col.begin(), col.end());
    rc.diff = std::move(rdiff);
    rc.u_target = std::move(ru);
    for (auto& d : rc.degree) d = -d;
}

template <class F>
typename F::E lift_coeff(long long v);
template <>
linalg::F2::E lift_coeff<linalg::F2>(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }
template <>
linalg::FQ::E lift_coeff<linalg::FQ>(long long v) { return Rational(v); }

template <class F>
struct GradedHomology {
    using Vec = linalg::SparseVec<F>;
    std::map<int, int> rank;                 // degree -> dim H
    std::map<int, std::vector<Vec>> u_cols;  // per degree: U_* column per rep, rep coords
    long long total() const {
        long long t = 0;
        for (const auto& [d, r] : rank) t += r;
        return t;
    }
};

template <class F>
GradedHomology<F> solve_region(const RegionComplex& rc) {
    using Vec = linalg::SparseVec<F>;
    GradedHomology<F> out;
    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < static_cast<int>(rc.degree.size()); ++i)
        by_degree[rc.degree[i]].push_back(i);

    auto column = [&](int cell) {
        Vec v;
        for (const auto& [t, c] : rc.diff[cell]) {
            auto e = lift_coeff<F>(c);
            if (F::nz(e)) v.emplace_back(t, e);
        }
        return v;
    };

    // boundary eliminators per target degree
    std::map<int, linalg::Eliminator<F>> elim;
    for (const auto& [d, cells] : by_degree)
        for (int cell : cells) {
            auto col = column(cell);
            if (!col.empty()) elim[d - 1].insert(col);
        }

    std::map<int, std::vector<Vec>> reps;  // cell coordinates
    for (const auto& [d, cells] : by_degree) {
        std::vector<Vec> cols;
        for (int cell : cells) cols.push_back(column(cell));
        auto kernel = linalg::nullspace<F>(cols);
        auto& r = reps[d];
        auto& e = elim[d];
        for (const auto& k : kernel) {
            Vec v;
            for (const auto& [local, val] : k) v.emplace_back(cells[local], val);
            std::sort(v.begin(), v.end());
            if (e.insert(v, static_cast<int>(r.size()))) r.push_back(v);
        }
        out.rank[d] = static_cast<int>(r.size());
    }

    for (const auto& [d, rlist] : reps) {
        auto& cols = out.u_cols[d];
        for (const auto& rep : rlist) {
            Vec img;
            for (const auto& [cell, val] : rep)
                if (rc.u_target[cell] >= 0) img.emplace_back(rc.u_target[cell], val);
            std::sort(img.begin(), img.end());
            std::map<int, typename F::E> coeffs;
            auto rem = elim[d - 2].reduce(img, &coeffs);
            if (!rem.empty())
                throw Error("region homology: U image is not a cycle modulo boundaries");
            Vec col;
            for (const auto& [rep_idx, val] : coeffs)
                if (F::nz(val)) col.emplace_back(rep_idx, val);
            cols.push_back(std::move(col));
        }
    }
    return out;
}

template <class F>
std::vector<linalg::SparseVec<F>> reduce_basis(const std::vector<linalg::SparseVec<F>>& vecs) {
    linalg::Eliminator<F> e;
    std::vector<linalg::SparseVec<F>> basis;
    for (auto v : vecs) {
        std::sort(v.begin(), v.end());
        auto r = e.reduce(v);
        if (!r.empty()) {
            e.insert(r);
            basis.push_back(r);
        }
    }
    return basis;
}

template <class F>
int joint_rank(const std::vector<linalg::SparseVec<F>>& a,
               const std::vector<linalg::SparseVec<F>>& b) {
    linalg::Eliminator<F> e;
    int rank = 0;
    for (auto v : a)
        if (e.insert(v)) ++rank;
    for (auto v : b)
        if (e.insert(v)) ++rank;
    return rank;
}

template <class F>
linalg::SparseVec<F> apply_u(const GradedHomology<F>& h, int d, const linalg::SparseVec<F>& v) {
    std::map<int, typename F::E> acc;
    auto it = h.u_cols.find(d);
    if (it == h.u_cols.end()) return {};
    for (const auto& [rep, val] : v)
        for (const auto& [target, c] : it->second[rep]) {
            auto& slot = acc[target];
            slot = F::add(slot, F::mul(val, c));
        }
    linalg::SparseVec<F> out;
    for (const auto& [k, val] : acc)
        if (F::nz(val)) out.emplace_back(k, val);
    return out;
}

/// Tower bottoms: classes killed by U that persist in the image of U^k over a
/// stable range of k. The truncated tails are long enough (the precondition
/// on the truncation guarantees it) for a clean plateau to appear.
template <class F>
std::multiset<int> detect_bottoms(const GradedHomology<F>& h, long long expected) {
    using Vec = linalg::SparseVec<F>;
    std::map<int, std::vector<Vec>> kernel;
    for (const auto& [d, cols] : h.u_cols) kernel[d] = linalg::nullspace<F>(cols);

    std::map<int, std::vector<Vec>> image;
    for (const auto& [d, r] : h.rank) {
        std::vector<Vec> full;
        for (int i = 0; i < r; ++i) full.push_back({{i, F::one()}});
        if (!full.empty()) image[d] = full;
    }
    long long kmax = h.total() + 2;
    std::vector<std::map<int, int>> history;
    for (long long k = 1; k <= kmax; ++k) {
        std::map<int, std::vector<Vec>> next;
        for (const auto& [d, basis] : image) {
            std::vector<Vec> mapped;
            for (const auto& v : basis) {
                auto u = apply_u(h, d, v);
                if (!u.empty()) mapped.push_back(std::move(u));
            }
            auto reduced = reduce_basis<F>(mapped);
            if (!reduced.empty()) next[d - 2] = std::move(reduced);
        }
        image = std::move(next);
        std::map<int, int> dims;
        for (const auto& [d, ker] : kernel) {
            if (ker.empty()) continue;
            auto it = image.find(d);
            if (it == image.end()) continue;
            int dk = static_cast<int>(reduce_basis<F>(ker).size());
            int di = static_cast<int>(it->second.size());
            int inter = dk + di - joint_rank<F>(ker, it->second);
            if (inter > 0) dims[d] = inter;
        }
        history.push_back(std::move(dims));
        if (image.empty()) break;
    }
    int best_len = 0;
    std::map<int, int> best;
    for (size_t s = 0; s < history.size();) {
        size_t e = s;
        while (e + 1 < history.size() && history[e + 1] == history[s]) ++e;
        long long tot = 0;
        for (const auto& [d, n] : history[s]) tot += n;
        if (tot == expected && static_cast<int>(e - s + 1) > best_len) {
            best_len = static_cast<int>(e - s + 1);
            best = history[s];
        }
        s = e + 1;
    }
    if (best_len < 2)
        throw TruncationUnstable("tower bottoms did not stabilize under U-iteration");
    std::multiset<int> out;
    for (const auto& [d, n] : best)
        for (int i = 0; i < n; ++i) out.insert(d);
    return out;
}

std::vector<TorsionSummand> region_torsion(const KnotComplex& c, const RegionSpec& region,
                                           long depth, long param) {
    std::vector<TorsionSummand> out;
    if (c.coeffs != Coefficients::Integer) return out;
    RegionComplex rc = build_region(c, region, depth);
    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < static_cast<int>(rc.degree.size()); ++i)
        by_degree[rc.degree[i]].push_back(i);
    std::map<int, int> local;
    for (const auto& [d, cells] : by_degree)
        for (int k = 0; k < static_cast<int>(cells.size()); ++k) local[cells[k]] = k;
    for (const auto& [d, cells] : by_degree) {
        auto target = by_degree.find(d - 1);
        if (target == by_degree.end()) continue;
        std::vector<std::vector<BigInt>> m(target->second.size(),
                                           std::vector<BigInt>(cells.size(), 0));
        bool nonzero = false;
        for (size_t col = 0; col < cells.size(); ++col)
            for (const auto& [t, v] : rc.diff[cells[col]]) {
                m[local[t]][col] = v;
                nonzero = true;
            }
        if (!nonzero) continue;
        for (const auto& e : linalg::smith_diagonal(std::move(m)))
            if (e > 1) out.push_back({static_cast<int>(param), d - 1, e});
    }
    return out;
}

template <class F>
TowerSummary analyze_region(const KnotComplex& c, const RegionSpec& region, long truncation) {
    int dir = region.direction();
    RegionComplex rc0 = build_region(c, region, truncation);
    RegionComplex rc1 = build_region(c, region, truncation + 1);
    if (dir == -1) {
        reverse_region(rc0);
        reverse_region(rc1);
    }
    GradedHomology<F> h0 = solve_region<F>(rc0);
    GradedHomology<F> h1 = solve_region<F>(rc1);

    TowerSummary out;
    long param = region.parameter();
    auto emit_reduced = [&](const std::map<int, int>& ranks) {
        for (const auto& [d, r] : ranks)
            if (r > 0) out.reduced.add_rank(static_cast<int>(param), dir == -1 ? -d : d, r);
    };

    if (dir == 0 || h1.total() == h0.total()) {
        if (h0.rank != h1.rank)
            throw TruncationUnstable("region ranks changed between truncation depths");
        emit_reduced(h0.rank);
        return out;
    }

    long long t = h1.total() - h0.total();
    if (t < 0) throw TruncationUnstable("homology shrank when the window grew");

    std::multiset<int> tops;
    {
        std::map<int, int> diff;
        for (const auto& [d, r] : h1.rank) diff[d] += r;
        for (const auto& [d, r] : h0.rank) diff[d] -= r;
        for (const auto& [d, n] : diff) {
            if (n < 0) throw TruncationUnstable("per-degree rank dropped as the window grew");
            for (int i = 0; i < n; ++i) tops.insert(d);
        }
    }
    if (static_cast<long long>(tops.size()) != t)
        throw TruncationUnstable("inconsistent tower count");

    auto bottoms = detect_bottoms<F>(h1, t);

    std::map<int, int> reduced = h0.rank;
    auto bi = bottoms.begin();
    auto ti = tops.begin();
    for (; bi != bottoms.end(); ++bi, ++ti) {
        int b = *bi, top = *ti;
        if ((top - b) % 2 != 0 || top - 2 < b)
            throw TruncationUnstable("tower bottom/top mismatch");
        for (int d = b; d <= top - 2; d += 2)
            if (--reduced[d] < 0) throw TruncationUnstable("tower occupancy exceeds rank");
        out.towers.push_back({static_cast<int>(param), dir == -1 ? -b : b});
    }
    emit_reduced(reduced);
    std::sort(out.towers.begin(), out.towers.end(),
              [](const Tower& a, const Tower& b) { return a.base_maslov < b.base_maslov; });
    return out;
}

}  // namespace

TowerSummary region_homology(const KnotComplex& c, const RegionSpec& region, long truncation) {
    if (!c.normalized) throw std::invalid_argument("region_homology needs a normalized complex");
    long minimum = static_cast<long>(c.generators.size()) + c.alexander_spread() +
                   std::labs(region.parameter());
    if (truncation < minimum)
        throw std::invalid_argument("truncation below the stability minimum " +
                                    std::to_string(minimum));

    TowerSummary out = c.coeffs == Coefficients::Mod2
                           ? analyze_region<linalg::F2>(c, region, truncation)
                           : analyze_region<linalg::FQ>(c, region, truncation);
    out.reduced.torsion = region_torsion(c, region, truncation, region.parameter());
    return out;
}

LaurentPolynomial alexander_polynomial(const HomologySummary& hat_groups) {
    LaurentPolynomial chi = euler_characteristic(hat_groups);
    if (!chi.is_symmetric())
        throw NotAKnotPolynomial("Euler characteristic is not symmetric: " + chi.str());
    long long at_one = chi.evaluate_at_one();
    if (at_one != 1 && at_one != -1)
        throw NotAKnotPolynomial("Euler characteristic at T=1 is " + std::to_string(at_one));
    return chi;
}

int genus_lower_bound(const HomologySummary& hat_groups) {
    if (hat_groups.total_rank() < 1)
        throw std::invalid_argument("genus bound needs a nonzero homology");
    int g = 0;
    for (const auto& [key, r] : hat_groups.free_ranks)
        if (r != 0) g = std::max(g, std::abs(key.first));
    return g;
}

KnotComplex connected_sum(const KnotComplex& a, const KnotComplex& b) {
    KnotComplex out;
    out.coeffs = a.coeffs;
    out.normalized = a.normalized && b.normalized;
    int nb = static_cast<int>(b.generators.size());
    auto index = [&](int i, int j) { return i * nb + j; };
    for (const auto& ga : a.generators)
        for (const auto& gb : b.generators)
            out.generators.push_back({ga.alexander + gb.alexander, ga.maslov + gb.maslov});
    for (const auto& ar : a.arrows)
        for (int j = 0; j < nb; ++j)
            out.arrows.push_back(
                {index(ar.from, j), index(ar.to, j), ar.n_w, ar.n_z, ar.coefficient});
    for (const auto& br : b.arrows)
        for (int i = 0; i < static_cast<int>(a.generators.size()); ++i) {
            long long sign = 1;
            if (out.coeffs == Coefficients::Integer && a.generators[i].maslov % 2 != 0) sign = -1;
            out.arrows.push_back(
                {index(i, br.from), index(i, br.to), br.n_w, br.n_z, sign * br.coefficient});
        }
    if (!verify_cfk_d_squared(out))
        throw DifferentialNotSquareZero("connected sum differential broken");
    return out;
}

bool skein_chi_check(const LaurentPolynomial& chi_minus, const LaurentPolynomial& chi_zero,
                     const LaurentPolynomial& chi_plus, bool merges_components) {
    if (merges_components) return (chi_minus - chi_zero - chi_plus).is_zero();
    LaurentPolynomial factor;  // (T^(1/2) - T^(-1/2))^2 = T - 2 + 1/T
    factor.add_term(2, 1);
    factor.add_term(0, -2);
    factor.add_term(-2, 1);
    return (chi_minus - factor * chi_zero - chi_plus).is_zero();
}

}  // namespace hfk
