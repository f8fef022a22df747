// Exact integer geometry of Z^2 triangles: metrics, acuteness predicates,
// canonical forms under the 48 algebraic representations, and congruence tests.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hc {

using i64 = std::int64_t;
using i128 = __int128;

// Coordinates are capped so that any squared distance fits in a signed 64-bit
// value with room for sums of a few terms.
inline constexpr i64 kCoordLimit = i64{1} << 31;

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LatticePoint {
    i64 x = 0;
    i64 y = 0;

    constexpr LatticePoint() = default;
    LatticePoint(i64 px, i64 py) : x(px), y(py) {
        if (x <= -kCoordLimit || x >= kCoordLimit || y <= -kCoordLimit || y >= kCoordLimit)
            throw OverflowError("lattice point coordinate exceeds 2^31");
    }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline i64 dist2(const LatticePoint& a, const LatticePoint& b) {
    const i64 dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Triangle with vertices (0,0), (m,n), (k,l).  The quadruple doubles as the
// ring element m*zeta^10 + n*zeta + k*zeta^2 + l*zeta^5 of Z[zeta_12]; see
// cyclotomic.hpp for the ring operations.
struct LatticeTriangle {
    i64 m = 0, n = 0, k = 0, l = 0;

    constexpr LatticeTriangle() = default;
    constexpr LatticeTriangle(i64 mm, i64 nn, i64 kk, i64 ll) : m(mm), n(nn), k(kk), l(ll) {}
    LatticeTriangle(const LatticePoint& a, const LatticePoint& b)
        : m(a.x), n(a.y), k(b.x), l(b.y) {}

    LatticePoint v1() const { return {m, n}; }
    LatticePoint v2() const { return {k, l}; }

    friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;
    friend auto operator<=>(const LatticeTriangle&, const LatticeTriangle&) = default;
};

// All quantities of the quadruple: squared sides d,e,f, doubled area s,
// half-sum t, signature a,b, dual signature g,h, and the norm r = t^2 - 3 s^2.
struct TriangleMetrics {
    i64 d = 0;  // (m-k)^2 + (n-l)^2
    i64 e = 0;  // k^2 + l^2
    i64 f = 0;  // m^2 + n^2
    i64 s = 0;  // |nk - ml|
    i64 t = 0;  // m^2+n^2+k^2+l^2-mk-nl
    i64 a = 0;  // middle sorted side minus least
    i64 b = 0;  // greatest sorted side minus middle
    i64 g = 0;  // |m^2-n^2+k^2-l^2-mk+nl|
    i64 h = 0;  // |2mn+2kl-ml-nk|
    i64 r = 0;  // t^2 - 3 s^2 = a^2+ab+b^2 = g^2+h^2
};

TriangleMetrics metrics(const LatticeTriangle& t);

// Sorted squared side lengths.
struct TriangleType {
    i64 l0sq = 0, l1sq = 0, l2sq = 0;

    bool isosceles() const { return l0sq == l1sq || l1sq == l2sq; }
    bool right_isosceles() const { return l0sq == l1sq && l2sq == 2 * l0sq; }

    friend bool operator==(const TriangleType&, const TriangleType&) = default;
    friend auto operator<=>(const TriangleType&, const TriangleType&) = default;
};

TriangleType type_of(const LatticeTriangle& t);

inline i64 doubled_area(const LatticeTriangle& t) {
    const i64 s = t.n * t.k - t.m * t.l;
    return s < 0 ? -s : s;
}

inline bool degenerate(const LatticeTriangle& t) { return doubled_area(t) == 0; }

// True iff every angle is <= pi/2.  Degenerate triangles are rejected.
bool is_nonobtuse(const LatticeTriangle& t);

// The 48 algebraic representations of the triangle: 12 torsion multiples of
// each of the 4 Galois-conjugate quadruples.  Geometrically these are the 24
// placements of the congruent triangles with a vertex at the origin, each in
// its two vertex orderings.
std::array<LatticeTriangle, 48> representations48(const LatticeTriangle& t);

// Lexicographically least quadruple among the 48 representations.
LatticeTriangle canonical_form(const LatticeTriangle& t);

bool is_z2_congruent(const LatticeTriangle& t1, const LatticeTriangle& t2);
bool is_r2_congruent(const LatticeTriangle& t1, const LatticeTriangle& t2);

// Hermite-normal-form key of the sublattice spanned by the triangle edges:
// basis [[a,b],[0,d]] with d | entries arranged so equal spans compare equal.
struct SublatticeKey {
    i64 a = 0, b = 0, d = 0;
    friend bool operator==(const SublatticeKey&, const SublatticeKey&) = default;
    friend auto operator<=>(const SublatticeKey&, const SublatticeKey&) = default;
};

SublatticeKey sublattice_key(LatticePoint e1, LatticePoint e2);

// Number of distinct sublattices among the 8 dihedral images of span(e1,e2).
int sublattice_orbit_size(const LatticePoint& e1, const LatticePoint& e2);

std::string to_string(const LatticeTriangle& t);
std::string to_string(const TriangleType& t);

}  // namespace hc
