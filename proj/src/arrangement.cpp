#include "hfk11/arrangement.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

#include "hfk11/errors.hpp"

namespace hfk {

namespace {

std::vector<Point> build_chain(const PLLoop& loop, int copies) {
    std::vector<Point> chain;
    Point period = loop.period_point();
    for (long k = -copies; k <= copies; ++k) {
        Point off = scale(Rational(k), period);
        for (const auto& v : loop.vertices) chain.push_back(v + off);
    }
    chain.push_back(loop.vertices.front() + scale(Rational(copies + 1LL), period));
    return chain;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Rational y_at(const Segment& s, const Rational& x) {
    if (s.a.x == s.b.x) return s.a.y;  // callers never ask for vertical segments
    return s.a.y + (s.b.y - s.a.y) * (x - s.a.x) / (s.b.x - s.a.x);
}

}  // namespace

Arrangement lift(const Diagram& d, int window_scale) {
    Arrangement arr;
    arr.diagram_ = d;
    arr.scale_ = window_scale;
    arr.alpha_chain_ = build_chain(d.alpha, window_scale);
    arr.beta_chain_ = build_chain(d.beta, window_scale);

    // global segment table: alpha pieces first, then beta pieces
    int alpha_segs = static_cast<int>(arr.alpha_chain_.size()) - 1;
    for (int i = 0; i + 1 < static_cast<int>(arr.alpha_chain_.size()); ++i)
        arr.segments_.push_back({arr.alpha_chain_[i], arr.alpha_chain_[i + 1]});
    for (int i = 0; i + 1 < static_cast<int>(arr.beta_chain_.size()); ++i)
        arr.segments_.push_back({arr.beta_chain_[i], arr.beta_chain_[i + 1]});

    // crossings of the two truncated lifts
    struct RawCross {
        Point pos;
        int a_seg, b_seg;
        Rational a_param, b_param;
        int sign;
    };
    std::vector<RawCross> raw;
    for (int i = 0; i < alpha_segs; ++i) {
        const Segment& sa = arr.segments_[i];
        for (int j = alpha_segs; j < static_cast<int>(arr.segments_.size()); ++j) {
            const Segment& sb = arr.segments_[j];
            auto hit = intersect_segments(sa, sb);
            if (hit.kind == SegContact::None) continue;
            if (hit.kind != SegContact::Proper)
                throw Error("lift: non-transverse contact between truncated lifts");
            Point da = sa.b - sa.a, db = sb.b - sb.a;
            int sign = cross(da, db) > 0 ? 1 : -1;
            raw.push_back({hit.at, i, j, Rational(i) + hit.t, Rational(j - alpha_segs) + hit.u, sign});
        }
    }
    if (raw.empty()) throw WindowTooSmall("lifted curves do not intersect at this scale");
    std::sort(raw.begin(), raw.end(),
              [](const RawCross& a, const RawCross& b) { return a.a_param < b.a_param; });

    // trapezoid decomposition of the two chains
    std::vector<Rational> xs;
    for (const auto& s : arr.segments_) {
        xs.push_back(s.a.x);
        xs.push_back(s.b.x);
    }
    for (const auto& c : raw) xs.push_back(c.pos.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    arr.slab_xs_ = xs;

    int nslabs = static_cast<int>(xs.size()) - 1;
    arr.slab_segments_.assign(std::max(nslabs, 0), {});
    std::vector<std::vector<Rational>> slab_mid(nslabs);
    for (int s = 0; s < nslabs; ++s) {
        Rational xm = (xs[s] + xs[s + 1]) / 2;
        auto& list = arr.slab_segments_[s];
        for (int i = 0; i < static_cast<int>(arr.segments_.size()); ++i) {
            const Segment& seg = arr.segments_[i];
            Rational lo = seg.a.x < seg.b.x ? seg.a.x : seg.b.x;
            Rational hi = seg.a.x < seg.b.x ? seg.b.x : seg.a.x;
            if (lo < xm && xm < hi) list.push_back(i);
        }
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            return y_at(arr.segments_[a], xm) < y_at(arr.segments_[b], xm);
        });
    }

    // trapezoids: (slab, gap) with gap between consecutive spanning segments;
    // merge across slab boundaries, collect everything open into the outer face
    std::vector<std::vector<int>> gap_ids(nslabs);
    int ntraps = 0;
    for (int s = 0; s < nslabs; ++s) {
        int gaps = std::max(static_cast<int>(arr.slab_segments_[s].size()) - 1, 0);
        gap_ids[s].resize(gaps);
        for (int g = 0; g < gaps; ++g) gap_ids[s][g] = ntraps++;
    }
    DisjointSets sets(ntraps + 1);
    int outer = ntraps;

    auto gap_interval = [&](int slab, int g, const Rational& x, Rational& lo, Rational& hi) {
        lo = y_at(arr.segments_[arr.slab_segments_[slab][g]], x);
        hi = y_at(arr.segments_[arr.slab_segments_[slab][g + 1]], x);
    };

    for (int s = 0; s + 1 <= nslabs; ++s) {
        // boundary between slab s-1 and s is xs[s]; s == 0 boundary is the outer edge
        Rational X = xs[s];
        // vertical segments sitting on this boundary
        std::vector<std::pair<Rational, Rational>> walls;
        for (const auto& seg : arr.segments_) {
            if (seg.a.x == seg.b.x && seg.a.x == X) {
                Rational lo = seg.a.y < seg.b.y ? seg.a.y : seg.b.y;
                Rational hi = seg.a.y < seg.b.y ? seg.b.y : seg.a.y;
                walls.emplace_back(lo, hi);
            }
        }
        auto blocked = [&](const Rational& lo, const Rational& hi) {
            // is (lo, hi) fully covered by wall segments?
            std::vector<std::pair<Rational, Rational>> cover;
            for (const auto& w : walls)
                if (w.first < hi && lo < w.second) cover.push_back(w);
            std::sort(cover.begin(), cover.end());
            Rational reach = lo;
            for (const auto& w : cover) {
                if (w.first > reach) return false;
                if (w.second > reach) reach = w.second;
            }
            return reach >= hi;
        };

        int left = s - 1, right = s;
        auto left_gaps = left >= 0 ? static_cast<int>(gap_ids[left].size()) : 0;
        auto right_gaps = right < nslabs ? static_cast<int>(gap_ids[right].size()) : 0;
        for (int gr = 0; gr < right_gaps; ++gr) {
            Rational rlo, rhi;
            gap_interval(right, gr, X, rlo, rhi);
            if (left < 0) {
                if (!blocked(rlo, rhi)) sets.unite(gap_ids[right][gr], outer);
                continue;
            }
            bool open_somewhere = false;
            for (int gl = 0; gl < left_gaps; ++gl) {
                Rational llo, lhi;
                gap_interval(left, gl, X, llo, lhi);
                Rational lo = std::max(llo, rlo), hi = std::min(lhi, rhi);
                if (lo < hi && !blocked(lo, hi)) {
                    sets.unite(gap_ids[right][gr], gap_ids[left][gl]);
                    open_somewhere = true;
                }
            }
            (void)open_somewhere;
            // portions of the right gap not facing any left gap face the outside
            Rational top_of_left = left_gaps >= 0 && !arr.slab_segments_[left].empty()
                                       ? y_at(arr.segments_[arr.slab_segments_[left].back()], X)
                                       : rlo;
            Rational bot_of_left = !arr.slab_segments_[left].empty()
                                       ? y_at(arr.segments_[arr.slab_segments_[left].front()], X)
                                       : rhi;
            if (arr.slab_segments_[left].empty()) {
                if (!blocked(rlo, rhi)) sets.unite(gap_ids[right][gr], outer);
            } else {
                if (rhi > top_of_left && !blocked(std::max(rlo, top_of_left), rhi))
                    sets.unite(gap_ids[right][gr], outer);
                if (rlo < bot_of_left && !blocked(rlo, std::min(rhi, bot_of_left)))
                    sets.unite(gap_ids[right][gr], outer);
            }
        }
        // leftover left gaps facing outside on their right edge
        for (int gl = 0; gl < left_gaps; ++gl) {
            Rational llo, lhi;
            gap_interval(left, gl, X, llo, lhi);
            if (right >= nslabs || arr.slab_segments_[right].empty()) {
                if (!blocked(llo, lhi)) sets.unite(gap_ids[left][gl], outer);
                continue;
            }
            Rational top = y_at(arr.segments_[arr.slab_segments_[right].back()], X);
            Rational bot = y_at(arr.segments_[arr.slab_segments_[right].front()], X);
            if (lhi > top && !blocked(std::max(llo, top), lhi))
                sets.unite(gap_ids[left][gl], outer);
            if (llo < bot && !blocked(llo, std::min(lhi, bot)))
                sets.unite(gap_ids[left][gl], outer);
        }
    }
    // rightmost boundary
    {
        Rational X = xs.back();
        int left = nslabs - 1;
        if (left >= 0)
            for (int gl = 0; gl < static_cast<int>(gap_ids[left].size()); ++gl)
                sets.unite(gap_ids[left][gl], outer);
        // conservative: anything touching the last boundary is open; vertical
        // walls at the global edge cannot bound a face of the two lifts
        (void)X;
    }

    // assign face ids to bounded components
    std::map<int, int> root_to_face;
    arr.slab_gap_faces_.assign(nslabs, {});
    int outer_root = sets.find(outer);
    for (int s = 0; s < nslabs; ++s) {
        arr.slab_gap_faces_[s].assign(gap_ids[s].size(), -1);
        for (int g = 0; g < static_cast<int>(gap_ids[s].size()); ++g) {
            int root = sets.find(gap_ids[s][g]);
            if (root == outer_root) continue;
            auto it = root_to_face.find(root);
            int id;
            if (it == root_to_face.end()) {
                id = static_cast<int>(arr.faces_.size());
                root_to_face[root] = id;
                Rational xm = (xs[s] + xs[s + 1]) / 2;
                Rational lo = y_at(arr.segments_[arr.slab_segments_[s][g]], xm);
                Rational hi = y_at(arr.segments_[arr.slab_segments_[s][g + 1]], xm);
                Arrangement::Face f;
                f.sample = {xm, (lo + hi) / 2};
                arr.faces_.push_back(f);
            } else {
                id = it->second;
            }
            arr.slab_gap_faces_[s][g] = id;
        }
    }

    // basepoint lattice counts per face
    if (!arr.faces_.empty()) {
        Rational xlo = xs.front(), xhi = xs.back();
        Rational ylo = arr.segments_[0].a.y, yhi = ylo;
        for (const auto& seg : arr.segments_) {
            ylo = std::min({ylo, seg.a.y, seg.b.y});
            yhi = std::max({yhi, seg.a.y, seg.b.y});
        }
        for (int which = 0; which < 2; ++which) {
            Point base = which == 0 ? d.w : d.z;
            BigInt ax = floor_div(xlo - base.x), bx = floor_div(xhi - base.x) + 1;
            BigInt ay = floor_div(ylo - base.y), by = floor_div(yhi - base.y) + 1;
            for (BigInt ix = ax; ix <= bx; ++ix)
                for (BigInt iy = ay; iy <= by; ++iy) {
                    Point p{base.x + Rational(ix), base.y + Rational(iy)};
                    int f = arr.locate_face(p);
                    if (f < 0) continue;
                    if (which == 0)
                        arr.faces_[f].w_count++;
                    else
                        arr.faces_[f].z_count++;
                }
        }
    }

    // crossing points with quadrant faces
    for (const auto& c : raw) {
        Arrangement::CrossingPoint cp;
        cp.pos = c.pos;
        cp.sign = c.sign;
        cp.alpha_param = c.a_param;
        cp.beta_param = c.b_param;

        auto slab_of_boundary = [&](const Rational& X) {
            return static_cast<int>(std::lower_bound(xs.begin(), xs.end(), X) - xs.begin());
        };
        int bidx = slab_of_boundary(c.pos.x);
        int right_slab = bidx;                 // slab [xs[bidx], xs[bidx+1])
        int left_slab = bidx - 1;
        int qf = 0;
        for (int side = 0; side < 2; ++side) {
            int slab = side == 0 ? right_slab : left_slab;
            if (slab < 0 || slab >= nslabs) {
                cp.quadrant_faces[qf++] = -1;
                cp.quadrant_faces[qf++] = -1;
                continue;
            }
            const auto& list = arr.slab_segments_[slab];
            std::vector<int> incident;
            for (int pos = 0; pos < static_cast<int>(list.size()); ++pos)
                if (list[pos] == c.a_seg || list[pos] == c.b_seg) incident.push_back(pos);
            auto gap_face = [&](int g) {
                if (g < 0 || g >= static_cast<int>(arr.slab_gap_faces_[slab].size())) return -1;
                return arr.slab_gap_faces_[slab][g];
            };
            if (incident.size() == 2) {
                if (incident[1] != incident[0] + 1)
                    throw Error("lift: crossing quadrants are not adjacent in slab order");
                // between / above / below; two of the four quadrants live here
                if (side == 0) {
                    cp.quadrant_faces[qf++] = gap_face(incident[0]);       // east sliver
                    cp.quadrant_faces[qf++] = gap_face(incident[1]);       // above both
                } else {
                    cp.quadrant_faces[qf++] = gap_face(incident[0]);       // west sliver
                    cp.quadrant_faces[qf++] = gap_face(incident[0] - 1);   // below both
                }
            } else if (incident.size() == 1) {
                // the other incident segment is vertical at this x
                cp.quadrant_faces[qf++] = gap_face(incident[0]);        // just above
                cp.quadrant_faces[qf++] = gap_face(incident[0] - 1);    // just below
            } else {
                throw Error("lift: crossing is not on a spanning segment");
            }
        }
        arr.points_.push_back(cp);
    }
    return arr;
}

int Arrangement::locate_face(const Point& p) const {
    if (slab_xs_.empty()) return -1;
    if (p.x <= slab_xs_.front() || p.x >= slab_xs_.back()) return -1;
    int slab = static_cast<int>(std::upper_bound(slab_xs_.begin(), slab_xs_.end(), p.x) -
                                slab_xs_.begin()) - 1;
    if (slab < 0 || slab >= static_cast<int>(slab_segments_.size())) return -1;
    const auto& list = slab_segments_[slab];
    int below = 0;
    for (int idx : list) {
        const Segment& s = segments_[idx];
        // p is never on a segment here (basepoints are off the curves)
        if (y_at(s, p.x) < p.y) ++below;
    }
    int gap = below - 1;
    if (gap < 0 || gap >= static_cast<int>(slab_gap_faces_[slab].size())) return -1;
    return slab_gap_faces_[slab][gap];
}

std::vector<Point> Arrangement::boundary_loop(int from, int to) const {
    const auto& pf = points_[from];
    const auto& pt = points_[to];
    std::vector<Point> loop;
    loop.push_back(pf.pos);
    // alpha arc from `from` to `to`
    {
        Rational a = pf.alpha_param, b = pt.alpha_param;
        if (a < b) {
            for (long k = static_cast<long>(floor_div(a)) + 1; Rational(k) < b; ++k)
                loop.push_back(alpha_chain_[k]);
        } else {
            for (long k = static_cast<long>(floor_div(a)); Rational(k) > b; --k)
                loop.push_back(alpha_chain_[k]);
            // floor_div(a) itself may equal a when the crossing sits on a vertex;
            // validation forbids that, so the loop above is exact.
        }
        loop.push_back(pt.pos);
    }
    // beta arc from `to` back to `from`
    {
        Rational a = pt.beta_param, b = pf.beta_param;
        int off = static_cast<int>(alpha_chain_.size()) - 1;  // beta segments start here
        if (a < b) {
            for (long k = static_cast<long>(floor_div(a)) + 1; Rational(k) < b; ++k)
                loop.push_back(beta_chain_[k]);
        } else {
            for (long k = static_cast<long>(floor_div(a)); Rational(k) > b; --k)
                loop.push_back(beta_chain_[k]);
        }
        (void)off;
    }
    return loop;
}

long Arrangement::lattice_count_in_loop(const std::vector<Point>& loop, const Point& base) const {
    Rational xlo = loop[0].x, xhi = xlo, ylo = loop[0].y, yhi = ylo;
    for (const auto& p : loop) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    }
    long total = 0;
    for (BigInt ix = floor_div(xlo - base.x); ix <= floor_div(xhi - base.x) + 1; ++ix)
        for (BigInt iy = floor_div(ylo - base.y); iy <= floor_div(yhi - base.y) + 1; ++iy) {
            Point p{base.x + Rational(ix), base.y + Rational(iy)};
            total += winding_number(loop, p);
        }
    return total;
}

DiskClass Arrangement::disk_class(int from, int to) const {
    if (from == to || from < 0 || to < 0 || from >= point_count() || to >= point_count())
        throw std::invalid_argument("disk_class: bad point indices");
    DiskClass c;
    c.from = from;
    c.to = to;
    auto loop = boundary_loop(from, to);
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        long w = winding_number(loop, faces_[f].sample);
        if (w != 0) c.multiplicities[f] = w;
    }
    c.n_w = lattice_count_in_loop(loop, diagram_.w);
    c.n_z = lattice_count_in_loop(loop, diagram_.z);
    return c;
}

Rational Arrangement::corner_multiplicity(const DiskClass& c, int p) const {
    Rational sum(0);
    for (int q = 0; q < 4; ++q) {
        int f = points_[p].quadrant_faces[q];
        if (f < 0) continue;
        auto it = c.multiplicities.find(f);
        if (it != c.multiplicities.end()) sum += Rational(it->second);
    }
    return sum / 4;
}

int Arrangement::maslov_index(const DiskClass& c) const {
    Rational mu = 2 * (corner_multiplicity(c, c.from) + corner_multiplicity(c, c.to));
    if (boost::multiprecision::denominator(mu) != 1)
        throw NonIntegralMaslov("maslov index " + rational_string(mu) + " is not an integer");
    return static_cast<int>(boost::multiprecision::numerator(mu));
}

std::vector<DiskClass> Arrangement::positive_mu1_classes() const {
    std::vector<DiskClass> out;
    int n = point_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            DiskClass fwd = disk_class(i, j);
            bool fwd_nonneg = true, bwd_nonneg = true, nonzero = false;
            for (const auto& [f, m] : fwd.multiplicities) {
                nonzero = true;
                if (m < 0) fwd_nonneg = false;
                if (m > 0) bwd_nonneg = false;
            }
            if (!nonzero) continue;
            DiskClass cand;
            if (fwd_nonneg) {
                cand = fwd;
            } else if (bwd_nonneg) {
                cand = disk_class(j, i);
            } else {
                continue;
            }
            if (maslov_index(cand) != 1) continue;
            cand.maslov = 1;
            out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end(), [](const DiskClass& a, const DiskClass& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    return out;
}

Arrangement stabilize(const Diagram& d, int max_doublings) {
    auto signature = [](const Arrangement& a) {
        std::vector<std::array<long, 5>> sig;
        for (const auto& c : a.positive_mu1_classes())
            sig.push_back({c.from, c.to, c.n_w, c.n_z, c.maslov});
        return std::make_pair(a.point_count(), sig);
    };
    int scale = 1;
    bool have_prev = false;
    std::pair<int, std::vector<std::array<long, 5>>> prev;
    for (int round = 0; round <= max_doublings; ++round) {
        try {
            Arrangement cur = lift(d, scale);
            auto sig = signature(cur);
            if (have_prev && sig == prev) return cur;
            prev = sig;
            have_prev = true;
        } catch (const WindowTooSmall&) {
            have_prev = false;
        }
        scale *= 2;
    }
    throw StabilizationLimitExceeded("arrangement did not stabilize after " +
                                     std::to_string(max_doublings) + " doublings");
}

std::string Arrangement::debug_json() const {
    nlohmann::json j;
    j["window_scale"] = scale_;
    j["point_count"] = point_count();
    auto pt_json = [](const Point& p) {
        return nlohmann::json::array({rational_string(p.x), rational_string(p.y)});
    };
    for (const auto& p : points_) {
        nlohmann::json pj;
        pj["pos"] = pt_json(p.pos);
        pj["sign"] = p.sign;
        pj["quadrant_faces"] = {p.quadrant_faces[0], p.quadrant_faces[1], p.quadrant_faces[2],
                                p.quadrant_faces[3]};
        j["points"].push_back(pj);
    }
    for (const auto& f : faces_) {
        nlohmann::json fj;
        fj["sample"] = pt_json(f.sample);
        fj["w_count"] = f.w_count;
        fj["z_count"] = f.z_count;
        j["faces"].push_back(fj);
    }
    return j.dump(2) + "\n";
}

}  // namespace hfk
