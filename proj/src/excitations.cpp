#include "hc/excitations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hc {

namespace {

i64 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Inside or on the boundary of a simple polygon, exact integer arithmetic.
bool point_in_polygon(const LatticePoint& p, const std::vector<LatticePoint>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        if (on_segment(poly[i], poly[(i + 1) % n], p)) return true;
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint &a = poly[i], &b = poly[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            i64 t = (p.y - a.y) * (b.x - a.x) - (p.x - a.x) * (b.y - a.y);
            if (b.y < a.y) t = -t;
            if (t > 0) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

Sublattice::Sublattice(LatticePoint e1, LatticePoint e2, i64 d2)
    : e1_(e1), e2_(e2), d2_(d2) {
    det_raw_ = e1.x * e2.y - e1.y * e2.x;
    det_ = det_raw_ < 0 ? -det_raw_ : det_raw_;
    if (det_ == 0) throw std::invalid_argument("Sublattice: basis is degenerate");
    const i64 s1 = e1.x * e1.x + e1.y * e1.y;
    const i64 s2 = e2.x * e2.x + e2.y * e2.y;
    const i64 dx = e1.x - e2.x, dy = e1.y - e2.y;
    if (s1 < d2 || s2 < d2 || dx * dx + dy * dy < d2)
        throw std::invalid_argument("Sublattice: fundamental triangle violates the exclusion");
}

LatticePoint Sublattice::site(i64 a, i64 b) const {
    return {a * e1_.x + b * e2_.x, a * e1_.y + b * e2_.y};
}

std::vector<LatticePoint> Sublattice::nearby_sites(const LatticePoint& p, int window) const {
    // floor of the basis coordinates of p
    i64 an = p.x * e2_.y - p.y * e2_.x;
    i64 bn = p.y * e1_.x - p.x * e1_.y;
    if (det_raw_ < 0) {
        an = -an;
        bn = -bn;
    }
    auto fdiv = [](i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    const i64 a0 = fdiv(an, det_);
    const i64 b0 = fdiv(bn, det_);
    std::vector<LatticePoint> out;
    out.reserve(std::size_t((2 * window + 2) * (2 * window + 2)));
    for (int da = -window; da <= window + 1; ++da)
        for (int db = -window; db <= window + 1; ++db) out.push_back(site(a0 + da, b0 + db));
    return out;
}

std::vector<LatticePoint> Sublattice::repelled(const LatticePoint& p) const {
    std::vector<LatticePoint> out;
    for (const auto& s : nearby_sites(p))
        if (dist2(p, s) < d2_) out.push_back(s);
    return out;
}

bool Sublattice::is_site(const LatticePoint& p) const {
    i64 an = p.x * e2_.y - p.y * e2_.x;
    i64 bn = p.y * e1_.x - p.x * e1_.y;
    return an % det_raw_ == 0 && bn % det_raw_ == 0;
}

std::vector<LatticePoint> Sublattice::fundamental_points() const {
    const i64 xs[4] = {0, e1_.x, e2_.x, e1_.x + e2_.x};
    const i64 ys[4] = {0, e1_.y, e2_.y, e1_.y + e2_.y};
    std::vector<LatticePoint> out;
    for (i64 x = *std::min_element(xs, xs + 4) - 1; x <= *std::max_element(xs, xs + 4) + 1; ++x) {
        for (i64 y = *std::min_element(ys, ys + 4) - 1; y <= *std::max_element(ys, ys + 4) + 1;
             ++y) {
            i64 an = x * e2_.y - y * e2_.x;
            i64 bn = y * e1_.x - x * e1_.y;
            if (det_raw_ < 0) {
                an = -an;
                bn = -bn;
            }
            if (0 <= an && an < det_ && 0 <= bn && bn < det_) out.push_back({x, y});
        }
    }
    return out;
}

std::vector<LatticePoint> Sublattice::canonical_tuple(std::vector<LatticePoint> pts) const {
    std::sort(pts.begin(), pts.end());
    const LatticePoint p = pts.front();
    i64 an = p.x * e2_.y - p.y * e2_.x;
    i64 bn = p.y * e1_.x - p.x * e1_.y;
    if (det_raw_ < 0) {
        an = -an;
        bn = -bn;
    }
    auto fdiv = [](i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    const LatticePoint shift = site(-fdiv(an, det_), -fdiv(bn, det_));
    for (auto& q : pts) q = {q.x + shift.x, q.y + shift.y};
    return pts;
}

const std::vector<Shape>& excitation_shapes() {
    static const std::vector<Shape> shapes = {
        {"triangleShape", ShapeKind::Triangle, {{0, 0}, {1, 0}, {0, 1}}},
        {"triangleShapeB", ShapeKind::Triangle, {{0, 0}, {1, 0}, {-1, 1}}},
        {"parallelogramShapeA", ShapeKind::Parallelogram, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}},
        {"parallelogramShapeB", ShapeKind::Parallelogram, {{1, 0}, {2, 0}, {1, 1}, {0, 1}}},
        {"parallelogramShapeC", ShapeKind::Parallelogram, {{1, 0}, {1, 1}, {0, 2}, {0, 1}}},
        {"parallelogramShapeD", ShapeKind::Parallelogram, {{0, 0}, {1, 0}, {-1, 1}, {-2, 1}}},
        {"parallelogramShapeE", ShapeKind::Parallelogram, {{0, 0}, {2, -1}, {1, 0}, {-1, 1}}},
        {"trapezeShapeA", ShapeKind::Trapeze, {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {0, 1}}},
        {"trapezeShapeB", ShapeKind::Trapeze, {{0, 0}, {1, 0}, {1, 1}, {0, 2}, {0, 1}}},
        {"trapezeShapeC", ShapeKind::Trapeze, {{0, 1}, {0, 2}, {1, 1}, {2, 0}, {1, 0}}},
        {"doubleTriangleShape", ShapeKind::DoubleTriangle,
         {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {0, 2}, {0, 1}}},
    };
    return shapes;
}

namespace {

// Shapes are realized over the basis exactly as given; the tuple families
// (and the published counts) depend on that order.
std::vector<LatticePoint> realize(const Shape& shape, const Sublattice& sub) {
    const LatticePoint f1 = sub.e1(), f2 = sub.e2();
    std::vector<LatticePoint> out;
    for (const auto& [a, b] : shape.vertices)
        out.push_back({a * f1.x + b * f2.x, a * f1.y + b * f2.y});
    return out;
}

std::vector<LatticePoint> polygon_lattice_points(const std::vector<LatticePoint>& poly) {
    i64 xlo = poly[0].x, xhi = poly[0].x, ylo = poly[0].y, yhi = poly[0].y;
    for (const auto& v : poly) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    std::vector<LatticePoint> out;
    for (i64 x = xlo; x <= xhi; ++x)
        for (i64 y = ylo; y <= yhi; ++y)
            if (point_in_polygon({x, y}, poly)) out.push_back({x, y});
    return out;
}

std::set<LatticePoint> joint_repelled(const Sublattice& sub,
                                      const std::vector<LatticePoint>& pts) {
    std::set<LatticePoint> out;
    for (const auto& p : pts)
        for (const auto& s : sub.repelled(p)) out.insert(s);
    return out;
}

bool mutually_admissible(const Sublattice& sub, const std::vector<LatticePoint>& pts,
                         const LatticePoint& q) {
    for (const auto& p : pts)
        if (dist2(p, q) < sub.d2()) return false;
    return true;
}

std::vector<std::vector<LatticePoint>> shape_pairs(const Sublattice& sub,
                                                   const std::vector<LatticePoint>& pts) {
    std::set<std::vector<LatticePoint>> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (dist2(pts[i], pts[j]) < sub.d2()) continue;
            if (joint_repelled(sub, {pts[i], pts[j]}).size() != 4) continue;
            std::vector<LatticePoint> pair = {pts[i], pts[j]};
            std::sort(pair.begin(), pair.end());
            out.insert(pair);
        }
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<LatticePoint> admissible_points(const Shape& shape, const Sublattice& sub) {
    const auto poly = realize(shape, sub);
    std::vector<LatticePoint> out;
    for (const auto& p : polygon_lattice_points(poly)) {
        if (sub.is_site(p)) continue;
        if (sub.repelled(p).size() != 3) continue;
        int vertices_repelled = 0;
        for (const auto& v : poly)
            if (dist2(p, v) < sub.d2()) ++vertices_repelled;
        if (vertices_repelled == 3) out.push_back(p);
    }
    return out;
}

std::vector<std::vector<LatticePoint>> admissible_tuples(const Shape& shape,
                                                         const Sublattice& sub, int arity) {
    if (arity == 1) {
        std::vector<std::vector<LatticePoint>> out;
        for (const auto& p : admissible_points(shape, sub)) out.push_back({p});
        return out;
    }
    if (arity == 2) {
        if (shape.kind != ShapeKind::Parallelogram)
            throw std::invalid_argument("pairs are drawn from parallelogram shapes");
        return shape_pairs(sub, admissible_points(shape, sub));
    }
    if (arity == 3) {
        if (shape.kind != ShapeKind::Trapeze)
            throw std::invalid_argument("triples are drawn from trapeze shapes");
        const auto pts = admissible_points(shape, sub);
        const auto pairs = shape_pairs(sub, pts);
        std::set<std::vector<LatticePoint>> out;
        for (const auto& p : pts)
            for (const auto& pair : pairs) {
                if (!mutually_admissible(sub, pair, p)) continue;
                std::vector<LatticePoint> t = {p, pair[0], pair[1]};
                std::sort(t.begin(), t.end());
                out.insert(t);
            }
        return {out.begin(), out.end()};
    }
    if (arity == 4) {
        if (shape.kind != ShapeKind::DoubleTriangle)
            throw std::invalid_argument("quadruples are drawn from the double triangle");
        // triangle-shape points extended with trapeze-C triples
        const auto& shapes = excitation_shapes();
        const auto pts = admissible_points(shapes[0], sub);
        const auto triples = admissible_tuples(shapes[9], sub, 3);
        std::set<std::vector<LatticePoint>> out;
        for (const auto& p : pts)
            for (const auto& t : triples) {
                if (!mutually_admissible(sub, t, p)) continue;
                std::vector<LatticePoint> q = {p, t[0], t[1], t[2]};
                std::sort(q.begin(), q.end());
                out.insert(q);
            }
        return {out.begin(), out.end()};
    }
    throw std::invalid_argument("arity must be between 1 and 4");
}

i64 census_count(const Sublattice& sub, int arity) {
    if (arity < 1) throw std::invalid_argument("census_count: arity must be >= 1");
    // insertion candidates around the FP: points repelling exactly 3 sites
    std::vector<LatticePoint> fp_singles;
    for (const auto& p : sub.fundamental_points()) {
        if (sub.is_site(p)) continue;
        if (sub.repelled(p).size() == 3) fp_singles.push_back(p);
    }
    if (arity == 1) return i64(fp_singles.size());
    std::vector<LatticePoint> cand;
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b) {
            const LatticePoint base = sub.site(a, b);
            for (const auto& p : fp_singles) cand.push_back({p.x + base.x, p.y + base.y});
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::map<LatticePoint, std::vector<LatticePoint>> repcache;
    for (const auto& p : cand) {
        auto rep = sub.repelled(p);
        std::sort(rep.begin(), rep.end());
        repcache.emplace(p, std::move(rep));
    }
    auto joint_size = [&](const std::vector<LatticePoint>& pts) {
        std::vector<LatticePoint> merged;
        for (const auto& p : pts) {
            auto it = repcache.find(p);
            if (it == repcache.end()) {
                auto rep = sub.repelled(p);
                std::sort(rep.begin(), rep.end());
                it = repcache.emplace(p, std::move(rep)).first;
            }
            merged.insert(merged.end(), it->second.begin(), it->second.end());
        }
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        return merged.size();
    };

    std::set<std::vector<LatticePoint>> level;
    for (const auto& p : fp_singles) level.insert({p});
    for (int k = 2; k <= arity; ++k) {
        std::set<std::vector<LatticePoint>> next;
        for (const auto& tup : level) {
            for (const auto& q : cand) {
                if (std::find(tup.begin(), tup.end(), q) != tup.end()) continue;
                if (!mutually_admissible(sub, tup, q)) continue;
                std::vector<LatticePoint> ext = tup;
                ext.push_back(q);
                if (joint_size(ext) != std::size_t(k) + 2) continue;
                next.insert(sub.canonical_tuple(std::move(ext)));
            }
        }
        level = std::move(next);
    }
    return i64(level.size());
}

namespace {

// Translation classes of the shape-composed tuples, closed under central
// inversion (the inverted shape instances tile the other half of each FP).
i64 shape_class_count(const Sublattice& sub, int arity) {
    std::set<std::vector<LatticePoint>> classes;
    auto insert_with_inverse = [&](const std::vector<LatticePoint>& t) {
        classes.insert(sub.canonical_tuple(t));
        std::vector<LatticePoint> inv;
        inv.reserve(t.size());
        for (const auto& p : t) inv.push_back({-p.x, -p.y});
        classes.insert(sub.canonical_tuple(inv));
    };
    const auto& shapes = excitation_shapes();
    for (const auto& shape : shapes) {
        const bool wanted = (arity == 2 && shape.kind == ShapeKind::Parallelogram) ||
                            (arity == 3 && shape.kind == ShapeKind::Trapeze) ||
                            (arity == 4 && shape.kind == ShapeKind::DoubleTriangle);
        if (!wanted) continue;
        for (const auto& t : admissible_tuples(shape, sub, arity)) insert_with_inverse(t);
    }
    return i64(classes.size());
}

}  // namespace

ExcitationReport count_excitations(const Sublattice& sub) {
    ExcitationReport rep;
    rep.singles = census_count(sub, 1);  // every 3-repelling point, placement-free
    rep.doubles = shape_class_count(sub, 2);
    rep.triples = shape_class_count(sub, 3);
    rep.quads = shape_class_count(sub, 4);
    rep.total = rep.singles + rep.doubles + rep.triples + rep.quads;
    return rep;
}

i64 count_quintuple_extensions(const Sublattice& sub) {
    // extensions of the quadruple classes by a fifth mutually admissible
    // insertion point jointly repelling exactly seven sites
    std::set<std::vector<LatticePoint>> quads;
    for (const auto& shape : excitation_shapes()) {
        if (shape.kind != ShapeKind::DoubleTriangle) continue;
        for (const auto& t : admissible_tuples(shape, sub, 4)) {
            quads.insert(sub.canonical_tuple(t));
            std::vector<LatticePoint> inv;
            for (const auto& p : t) inv.push_back({-p.x, -p.y});
            quads.insert(sub.canonical_tuple(inv));
        }
    }
    std::vector<LatticePoint> fp_singles;
    for (const auto& p : sub.fundamental_points())
        if (!sub.is_site(p) && sub.repelled(p).size() == 3) fp_singles.push_back(p);
    std::vector<LatticePoint> cand;
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b) {
            const LatticePoint base = sub.site(a, b);
            for (const auto& p : fp_singles) cand.push_back({p.x + base.x, p.y + base.y});
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::set<std::vector<LatticePoint>> quints;
    for (const auto& q : quads) {
        for (const auto& p : cand) {
            if (std::find(q.begin(), q.end(), p) != q.end()) continue;
            if (!mutually_admissible(sub, q, p)) continue;
            std::vector<LatticePoint> ext = q;
            ext.push_back(p);
            if (joint_repelled(sub, ext).size() != 7) continue;
            quints.insert(sub.canonical_tuple(ext));
        }
    }
    return i64(quints.size());
}

std::optional<std::size_t> dominance_compare(const std::vector<ExcitationReport>& reports) {
    if (reports.empty()) return std::nullopt;
    std::size_t best = 0;
    bool tie = false;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].total > reports[best].total) {
            best = i;
            tie = false;
        } else if (reports[i].total == reports[best].total) {
            tie = true;
        }
    }
    return tie ? std::nullopt : std::optional<std::size_t>(best);
}

}  // namespace hc
