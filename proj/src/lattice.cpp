#include "hc/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hc {

namespace {

inline i64 abs64(i64 v) { return v < 0 ? -v : v; }

void check_product(i64 a, i64 b) {
    if (a == 0 || b == 0) return;
    const i128 p = i128(a) * b;
    if (p > i128(INT64_MAX) || p < i128(INT64_MIN))
        throw OverflowError("64-bit overflow in triangle metrics");
}

i64 mul_checked(i64 a, i64 b) {
    check_product(a, b);
    return a * b;
}

}  // namespace

TriangleMetrics metrics(const LatticeTriangle& t) {
    TriangleMetrics out;
    const i64 m = t.m, n = t.n, k = t.k, l = t.l;
    out.d = mul_checked(m - k, m - k) + mul_checked(n - l, n - l);
    out.e = mul_checked(k, k) + mul_checked(l, l);
    out.f = mul_checked(m, m) + mul_checked(n, n);
    out.s = abs64(mul_checked(n, k) - mul_checked(m, l));
    out.t = out.e + out.f - mul_checked(m, k) - mul_checked(n, l);
    i64 ss[3] = {out.d, out.e, out.f};
    std::sort(ss, ss + 3);
    out.a = ss[1] - ss[0];
    out.b = ss[2] - ss[1];
    out.g = abs64(out.f - mul_checked(n, n) * 2 + out.e - mul_checked(l, l) * 2 -
                  mul_checked(m, k) + mul_checked(n, l));
    out.h = abs64(2 * mul_checked(m, n) + 2 * mul_checked(k, l) - mul_checked(m, l) -
                  mul_checked(n, k));
    // r = t^2 - 3 s^2 computed in 128 bits and checked back into 64.
    const i128 r = i128(out.t) * out.t - 3 * i128(out.s) * out.s;
    if (r > i128(INT64_MAX) || r < 0)
        throw OverflowError("norm exceeds signed 64-bit");
    out.r = i64(r);
    return out;
}

TriangleType type_of(const LatticeTriangle& t) {
    i64 ss[3] = {dist2(t.v1(), t.v2()), dist2(t.v2(), LatticePoint{}),
                 dist2(t.v1(), LatticePoint{})};
    std::sort(ss, ss + 3);
    return {ss[0], ss[1], ss[2]};
}

bool is_nonobtuse(const LatticeTriangle& t) {
    if (degenerate(t)) return false;
    const TriangleType ty = type_of(t);
    return ty.l0sq + ty.l1sq >= ty.l2sq;
}

namespace {

inline LatticeTriangle mul_zeta(const LatticeTriangle& q) {
    return {-q.l, q.k, q.n - q.l, q.k - q.m};
}
inline LatticeTriangle conj_reflect(const LatticeTriangle& q) {
    return {q.m, -q.n, q.k, -q.l};
}
inline LatticeTriangle conj_swap(const LatticeTriangle& q) {
    return {q.k, q.l, q.m, q.n};
}

}  // namespace

std::array<LatticeTriangle, 48> representations48(const LatticeTriangle& t) {
    std::array<LatticeTriangle, 48> out;
    int idx = 0;
    const LatticeTriangle conjs[4] = {t, conj_reflect(t), conj_swap(t),
                                      conj_reflect(conj_swap(t))};
    for (const auto& c : conjs) {
        LatticeTriangle cur = c;
        for (int i = 0; i < 12; ++i) {
            out[idx++] = cur;
            cur = mul_zeta(cur);
        }
    }
    return out;
}

LatticeTriangle canonical_form(const LatticeTriangle& t) {
    const auto reps = representations48(t);
    return *std::min_element(reps.begin(), reps.end());
}

bool is_z2_congruent(const LatticeTriangle& t1, const LatticeTriangle& t2) {
    return canonical_form(t1) == canonical_form(t2);
}

bool is_r2_congruent(const LatticeTriangle& t1, const LatticeTriangle& t2) {
    return type_of(t1) == type_of(t2);
}

SublatticeKey sublattice_key(LatticePoint e1, LatticePoint e2) {
    // Row-style HNF of [[x1,y1],[x2,y2]]: reduce to [[a,b],[0,d]], a,d > 0,
    // 0 <= b < d is not required; instead b is reduced mod a after the swap.
    i64 x1 = e1.x, y1 = e1.y, x2 = e2.x, y2 = e2.y;
    // eliminate y via gcd steps on the second column
    while (y2 != 0) {
        const i64 q = y1 / y2;
        y1 -= q * y2;
        x1 -= q * x2;
        std::swap(x1, x2);
        std::swap(y1, y2);
    }
    // now y2 == 0: rows (x1,y1),(x2,0)
    if (x2 < 0) x2 = -x2;
    if (y1 < 0) {
        y1 = -y1;
        x1 = -x1;
    }
    if (x2 != 0) x1 = ((x1 % x2) + x2) % x2;
    return {x2, x1, y1};  // lattice = {(i*x2 + j*x1, j*y1)}
}

int sublattice_orbit_size(const LatticePoint& e1, const LatticePoint& e2) {
    std::set<SublatticeKey> keys;
    for (int rot = 0; rot < 4; ++rot) {
        for (int refl = 0; refl < 2; ++refl) {
            auto tr = [&](LatticePoint p) {
                for (int i = 0; i < rot; ++i) p = {-p.y, p.x};
                if (refl) p = {p.x, -p.y};
                return p;
            };
            keys.insert(sublattice_key(tr(e1), tr(e2)));
        }
    }
    return int(keys.size());
}

std::string to_string(const LatticeTriangle& t) {
    return "{" + std::to_string(t.m) + "," + std::to_string(t.n) + "," + std::to_string(t.k) +
           "," + std::to_string(t.l) + "}";
}

std::string to_string(const TriangleType& t) {
    return "[" + std::to_string(t.l0sq) + "|" + std::to_string(t.l1sq) + "|" +
           std::to_string(t.l2sq) + "]";
}

}  // namespace hc
