#include "hc/min_triangles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace hc {

namespace {

constexpr int kApexWindow = 4;

i64 isqrt64(i64 v) {
    if (v < 0) return -1;
    auto r = i64(std::sqrt(double(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Strict upper bound on the minimal doubled area, Eq.-(3.1) shape:
// S(D) < sqrt(3)/2 * D^2 + sqrt(2) * D.
i64 area_upper_bound(i64 d2) {
    const double ub = 0.8660254037844386 * double(d2) + 1.4142135623730951 * std::sqrt(double(d2));
    return i64(ub) + 2;
}

// Largest shortest-side-squared a minimizer can have: sqrt(3)/2 f0^2 <= s.
i64 shortest_side_cap(i64 d2) {
    const i64 ub = area_upper_bound(d2);
    return i64(double(ub) * 2.0 / 1.7320508075688772) + 2;
}

// Visits every window candidate whose base (i,j) is its shortest side and
// whose squared sides lie in [d2, 2*f0^2].  The callback receives the base,
// apex, doubled area and sorted sides.
template <typename F>
void sweep_candidates(i64 d2, i64 f0cap, F&& visit) {
    const i64 imax = isqrt64(f0cap);
    for (i64 i = 1; i <= imax; ++i) {
        const i64 jmax = std::min(i, isqrt64(f0cap - i * i));
        i64 jmin = 0;
        if (i * i < d2) {
            jmin = isqrt64(d2 - i * i);
            if (jmin * jmin < d2 - i * i) ++jmin;
        }
        for (i64 j = jmin; j <= jmax; ++j) {
            const i64 f0 = i * i + j * j;
            if (f0 < d2 || f0 > f0cap) continue;
            const double px = (double(i) - 1.7320508075688772 * double(j)) / 2.0;
            const double py = (1.7320508075688772 * double(i) + double(j)) / 2.0;
            const i64 pk = i64(std::llround(px));
            const i64 pl = i64(std::llround(py));
            for (i64 k = pk - kApexWindow; k <= pk + kApexWindow; ++k) {
                for (i64 l = pl - kApexWindow; l <= pl + kApexWindow; ++l) {
                    const i64 s = std::abs(i * l - j * k);
                    if (s == 0) continue;
                    const i64 e = k * k + l * l;
                    const i64 d = (i - k) * (i - k) + (j - l) * (j - l);
                    if (e < f0 || d < f0) continue;          // base must be shortest
                    if (std::max(e, d) > 2 * f0) continue;   // nonobtuse filter
                    visit(i, j, k, l, s, f0);
                }
            }
        }
    }
}

IsoKind kind_of(const TriangleType& t) {
    if (t.right_isosceles()) return IsoKind::RightIsosceles;
    if (t.isosceles()) return IsoKind::Isosceles;
    return IsoKind::Scalene;
}

std::vector<std::pair<i64, i64>> two_square_decompositions(i64 m) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 j = 0; 2 * j * j <= m; ++j) {
        const i64 rem = m - j * j;
        const i64 i = isqrt64(rem);
        if (i * i == rem && j <= i) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace

i64 min_doubled_area(i64 d2) {
    if (d2 < 1) throw std::invalid_argument("min_doubled_area: d2 must be >= 1");
    i64 best = area_upper_bound(d2);
    sweep_candidates(d2, shortest_side_cap(d2),
                     [&](i64, i64, i64, i64, i64 s, i64) { best = std::min(best, s); });
    return best;
}

std::vector<MinimalType> minimal_triangles_for(i64 d2) {
    const i64 target = min_doubled_area(d2);
    std::map<TriangleType, std::set<LatticeTriangle>> found;
    sweep_candidates(d2, shortest_side_cap(d2), [&](i64 i, i64 j, i64 k, i64 l, i64 s, i64) {
        if (s != target) return;
        const LatticeTriangle tri{i, j, k, l};
        found[type_of(tri)].insert(canonical_form(tri));
    });
    std::vector<MinimalType> out;
    for (const auto& [type, impls] : found) {
        MinimalType mt;
        mt.type = type;
        mt.implementations.assign(impls.begin(), impls.end());
        mt.kind = kind_of(type);
        out.push_back(std::move(mt));
    }
    return out;
}

namespace {

// All integral apex positions over the base (0,0)-(i,j) realizing some
// minimizing type, on the counterclockwise side.
std::vector<LatticePoint> apexes_over_base(i64 i, i64 j, i64 a0, i64 s,
                                           const std::vector<MinimalType>& types) {
    std::set<LatticePoint> apexes;
    for (const auto& mt : types) {
        const i64 f[3] = {mt.type.l0sq, mt.type.l1sq, mt.type.l2sq};
        for (int t = 0; t < 3; ++t) {
            if (f[t] != a0) continue;
            if (t > 0 && f[t] == f[t - 1]) continue;  // duplicate side value
            const i64 a1 = f[(t + 1) % 3], a2 = f[(t + 2) % 3];
            const i64 den = 2 * a0;
            for (const auto [p1, p2] : {std::pair{a1, a2}, std::pair{a2, a1}}) {
                const i128 xn = i128(i) * (a0 + p1 - p2) - i128(2) * j * s;
                const i128 yn = i128(j) * (a0 + p1 - p2) + i128(2) * i * s;
                if (xn % den == 0 && yn % den == 0)
                    apexes.insert(LatticePoint{i64(xn / den), i64(yn / den)});
            }
        }
    }
    return {apexes.begin(), apexes.end()};
}

}  // namespace

std::optional<SlidingRow> detect_sliding(i64 d2) {
    const auto types = minimal_triangles_for(d2);
    if (types.empty()) return std::nullopt;
    const i64 s = min_doubled_area(d2);
    std::set<i64> side_values;
    for (const auto& mt : types) {
        side_values.insert(mt.type.l0sq);
        side_values.insert(mt.type.l1sq);
        side_values.insert(mt.type.l2sq);
    }
    std::optional<SlidingRow> best;
    for (const i64 a0 : side_values) {
        for (const auto& [i, j] : two_square_decompositions(a0)) {
            auto apexes = apexes_over_base(i, j, a0, s, types);
            if (apexes.size() < 2) continue;
            // sliding requires two apexes generating distinct sublattices;
            // mirror-image apexes over the same base span the same lattice
            // and do not produce new ground states.
            bool distinct = false;
            const auto key0 = sublattice_key({i, j}, apexes.front());
            for (std::size_t u = 1; u < apexes.size() && !distinct; ++u)
                distinct = sublattice_key({i, j}, apexes[u]) != key0;
            if (!distinct) continue;
            SlidingRow row;
            row.d2 = d2;
            row.s = s;
            row.w = {j, -i};  // canonical presentation: base rotated to point down
            std::sort(apexes.begin(), apexes.end());
            for (const auto& a : apexes) row.apexes.push_back({a.y, -a.x});
            if (!best || row.apexes.size() > best->apexes.size() ||
                (row.apexes.size() == best->apexes.size() &&
                 std::pair{row.w, row.apexes} < std::pair{best->w, best->apexes}))
                best = row;
        }
    }
    return best;
}

MinRecord classify(i64 d2) {
    MinRecord rec;
    rec.d2 = d2;
    rec.s = min_doubled_area(d2);
    rec.types = minimal_triangles_for(d2);
    rec.sliding = detect_sliding(d2);
    if (rec.sliding) {
        rec.label = ClassLabel::S;
    } else {
        std::size_t max_impls = 0;
        for (const auto& mt : rec.types) max_impls = std::max(max_impls, mt.implementations.size());
        if (rec.types.size() == 1)
            rec.label = max_impls == 1 ? ClassLabel::A : ClassLabel::B0;
        else
            rec.label = max_impls == 1 ? ClassLabel::B1 : ClassLabel::B2;
    }
    // PGS count per Theorems 1(i) and 2: each congruence class contributes
    // m*S with m = 1 for d2 <= 2, otherwise 2 when its type is isosceles and
    // 4 when scalene.
    i64 pgs = 0;
    for (const auto& mt : rec.types) {
        const i64 mfac = d2 <= 2 ? 1 : (mt.kind == IsoKind::Scalene ? 4 : 2);
        pgs += mfac * rec.s * i64(mt.implementations.size());
    }
    rec.pgs_count = pgs;
    if (rec.label == ClassLabel::A) rec.egm_count = pgs;
    return rec;
}

i64 brute_force_oracle(i64 d2, i64 ceiling) {
    if (d2 > ceiling) throw std::invalid_argument("brute_force_oracle: d2 exceeds ceiling");
    const i64 ub = area_upper_bound(d2);
    // Side bound: the two sides adjacent to the largest angle satisfy
    // len1*len2*sin(60deg) <= s, so the middle side squared is at most
    // (4/3) ub^2 / d2; the longest then at most the sum of the other two.
    const double f1cap = 4.0 / 3.0 * double(ub) * double(ub) / double(d2);
    const i64 rmax = isqrt64(i64(2.0 * (f1cap + 1.0))) + 2;
    i64 best = ub;
    for (i64 x1 = 1; x1 <= rmax; ++x1) {
        for (i64 y1 = 0; y1 <= x1; ++y1) {
            const i64 a = x1 * x1 + y1 * y1;
            if (a < d2 || double(a) > f1cap + 1.0) continue;
            for (i64 x2 = -rmax; x2 <= rmax; ++x2) {
                for (i64 y2 = -rmax; y2 <= rmax; ++y2) {
                    const i64 b = x2 * x2 + y2 * y2;
                    if (b < a) continue;  // (x1,y1) shortest or tied
                    const i64 c = (x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2);
                    if (b < d2 || c < d2 || c < a) continue;
                    const i64 s = std::abs(x1 * y2 - y1 * x2);
                    if (s == 0 || s >= best) continue;
                    i64 ss[3] = {a, b, c};
                    std::sort(ss, ss + 3);
                    if (ss[0] + ss[1] < ss[2]) continue;
                    best = s;
                }
            }
        }
    }
    return best;
}

MinAreaTable::MinAreaTable(i64 max_d2) : max_d2_(max_d2) {
    if (max_d2 < 1) throw std::invalid_argument("MinAreaTable: max_d2 must be >= 1");
    const i64 cap = shortest_side_cap(max_d2);
    std::vector<std::int32_t> a(std::size_t(cap) + 1, INT32_MAX);
    sweep_candidates(1, cap, [&](i64, i64, i64, i64, i64 s, i64 f0) {
        if (s < a[std::size_t(f0)]) a[std::size_t(f0)] = std::int32_t(s);
    });
    s_.assign(std::size_t(max_d2) + 1, INT32_MAX);
    std::int32_t run = INT32_MAX;
    for (i64 m = cap; m >= 1; --m) {
        run = std::min(run, a[std::size_t(m)]);
        if (m <= max_d2) s_[std::size_t(m)] = run;
    }
}

i64 MinAreaTable::min_area(i64 d2) const {
    if (d2 < 1 || d2 > max_d2_) return 0;
    return s_[std::size_t(d2)];
}

namespace {

bool same_min_data(const MinRecord& a, const MinRecord& b) {
    if (a.s != b.s || a.types.size() != b.types.size()) return false;
    for (std::size_t i = 0; i < a.types.size(); ++i) {
        if (a.types[i].type != b.types[i].type) return false;
        if (a.types[i].implementations != b.types[i].implementations) return false;
    }
    return true;
}

}  // namespace

std::vector<MinRecord> classify_range(const GaussianTable& gt, i64 max_d2,
                                      const TableOptions& opt) {
    std::vector<MinRecord> out;
    const auto values = gt.attainable_up_to(max_d2);
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        MinRecord rec = classify(values[idx]);
        if (opt.collapse) {
            const i64 next = gt.next_attainable(values[idx]);
            if (next > 0) {
                MinRecord nrec = classify(next);
                if (same_min_data(rec, nrec)) continue;  // merged into the next row
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::S: return "S";
        case ClassLabel::A: return "A";
        case ClassLabel::B0: return "B0";
        case ClassLabel::B1: return "B1";
        case ClassLabel::B2: return "B2";
    }
    return "?";
}

}  // namespace hc
