#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "hfk11/rational.hpp"

namespace hfk::linalg {

// Coefficient fields for exact elimination. Matrices in this project are
// small but must never round: GF(2) for the default mode, rationals when
// integer-mode ranks are wanted.

struct F2 {
    using E = int;
    static E zero() { return 0; }
    static E one() { return 1; }
    static E add(E a, E b) { return a ^ b; }
    static E sub(E a, E b) { return a ^ b; }
    static E mul(E a, E b) { return a & b; }
    static E neg(E a) { return a; }
    static E inv(E) { return 1; }
    static bool nz(E a) { return a != 0; }
};

struct FQ {
    using E = Rational;
    static E zero() { return Rational(0); }
    static E one() { return Rational(1); }
    static E add(const E& a, const E& b) { return a + b; }
    static E sub(const E& a, const E& b) { return a - b; }
    static E mul(const E& a, const E& b) { return a * b; }
    static E neg(const E& a) { return -a; }
    static E inv(const E& a) { return 1 / a; }
    static bool nz(const E& a) { return a != 0; }
};

/// Sparse vector: sorted (index, coefficient) pairs, no zero entries stored.
template <class F>
using SparseVec = std::vector<std::pair<int, typename F::E>>;

template <class F>
SparseVec<F> sparse_add(const SparseVec<F>& a, const SparseVec<F>& b, typename F::E factor) {
    SparseVec<F> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            auto c = F::mul(factor, b[j].second);
            if (F::nz(c)) out.emplace_back(b[j].first, c);
            ++j;
        } else {
            auto c = F::add(a[i].second, F::mul(factor, b[j].second));
            if (F::nz(c)) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Incremental row-space eliminator over a field.
///
/// Rows are inserted one at a time and reduced against existing pivots. A row
/// can be tagged (tag >= 0); when later rows are reduced, the coefficients
/// picked up against tagged pivots are reported. This is how cycles are
/// expressed in a homology basis: boundary pivots are inserted untagged first,
/// then homology representatives tagged.
template <class F>
class Eliminator {
  public:
    using E = typename F::E;

    /// Reduce `v` against current pivots. Returns the remainder; if
    /// `tag_coeffs` is non-null, accumulates the coefficient used against each
    /// tagged pivot (keyed by tag).
    SparseVec<F> reduce(SparseVec<F> v, std::map<int, E>* tag_coeffs = nullptr) const {
        while (!v.empty()) {
            int lead = v.front().first;
            auto it = by_col_.find(lead);
            if (it == by_col_.end()) break;
            const Piv& p = pivots_[it->second];
            E factor = F::neg(F::mul(v.front().second, F::inv(p.lead_coeff)));
            if (tag_coeffs && p.tag >= 0) {
                auto& slot = (*tag_coeffs)[p.tag];
                slot = F::add(slot, F::neg(factor));
            }
            v = sparse_add<F>(v, p.row, factor);
        }
        return v;
    }

    /// Insert after reduction; returns false if the row reduced to zero.
    bool insert(SparseVec<F> v, int tag = -1) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        by_col_[v.front().first] = static_cast<int>(pivots_.size());
        pivots_.push_back(Piv{v.front().second, std::move(v), tag});
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

  private:
    struct Piv {
        E lead_coeff;
        SparseVec<F> row;
        int tag;
    };
    std::vector<Piv> pivots_;
    std::unordered_map<int, int> by_col_;
};

template <class F>
int rank(const std::vector<SparseVec<F>>& rows) {
    Eliminator<F> e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

/// Nullspace basis of the linear map sending basis vector i to `columns[i]`.
/// Returned vectors are in the source coordinates.
template <class F>
std::vector<SparseVec<F>> nullspace(const std::vector<SparseVec<F>>& columns) {
    // Run elimination on columns augmented with source bookkeeping.
    using E = typename F::E;
    struct Aug {
        SparseVec<F> img;
        SparseVec<F> src;
    };
    std::vector<Aug> pivots;
    std::unordered_map<int, int> by_col;
    std::vector<SparseVec<F>> kernel;
    for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
        SparseVec<F> img = columns[i];
        SparseVec<F> src{{i, F::one()}};
        while (!img.empty()) {
            auto it = by_col.find(img.front().first);
            if (it == by_col.end()) break;
            const Aug& p = pivots[it->second];
            E factor = F::neg(F::mul(img.front().second, F::inv(p.img.front().second)));
            img = sparse_add<F>(img, p.img, factor);
            src = sparse_add<F>(src, p.src, factor);
        }
        if (img.empty()) {
            kernel.push_back(std::move(src));
        } else {
            by_col[img.front().first] = static_cast<int>(pivots.size());
            pivots.push_back(Aug{std::move(img), std::move(src)});
        }
    }
    return kernel;
}

/// Smith normal form diagonal of an integer matrix (destroys its argument).
/// Entries are arbitrary precision; no overflow is possible.
inline std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
    std::vector<BigInt> diag;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r0 = 0, c0 = 0;
    auto abs = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };
    while (r0 < rows && c0 < cols) {
        // locate smallest nonzero entry in the remaining block
        size_t pr = r0, pc = c0;
        BigInt best = 0;
        for (size_t i = r0; i < rows; ++i)
            for (size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[r0], m[pr]);
        for (size_t i = r0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        bool clean = true;
        for (size_t i = r0 + 1; i < rows; ++i) {
            BigInt q = m[i][c0] / m[r0][c0];
            if (q != 0)
                for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
            if (m[i][c0] != 0) clean = false;
        }
        for (size_t j = c0 + 1; j < cols; ++j) {
            BigInt q = m[r0][j] / m[r0][c0];
            if (q != 0)
                for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
            if (m[r0][j] != 0) clean = false;
        }
        if (!clean) continue;  // entries shrank; pick a new pivot
        // divisibility sweep: pivot must divide the rest of the block
        bool divides = true;
        for (size_t i = r0 + 1; i < rows && divides; ++i)
            for (size_t j = c0 + 1; j < cols && divides; ++j)
                if (m[i][j] % m[r0][c0] != 0) {
                    for (size_t jj = c0; jj < cols; ++jj) m[r0][jj] += m[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    return diag;
}

}  // namespace hfk::linalg
