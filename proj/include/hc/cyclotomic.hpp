// Ring arithmetic in Z[zeta_12] over the basis (zeta^10, zeta, zeta^2, zeta^5),
// unit and torsion actions, norm-equation solving, coset leaders and members,
// coset-count closed forms, family classification, and the eventual-minimality
// index.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hc/lattice.hpp"
#include "hc/min_triangles.hpp"

namespace hc {

// A cyclotomic integer m*zeta^10 + n*zeta + k*zeta^2 + l*zeta^5 shares its
// representation with the triangle quadruple.
using CyclotomicInt = LatticeTriangle;

inline constexpr CyclotomicInt kOne{1, 0, 1, 0};
inline constexpr CyclotomicInt kZeta{0, 1, 0, 0};
inline constexpr CyclotomicInt kSwapUnit{0, 1, 1, 0};   // zeta + zeta^2
inline constexpr CyclotomicInt kPellUnit{2, 1, 2, -1};  // 2 + sqrt(3)
inline constexpr CyclotomicInt kPellInv{2, -1, 2, 1};   // 2 - sqrt(3)

CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b);

// Algebraic norm: evaluates the three closed forms and insists they agree.
i64 norm(const CyclotomicInt& a);

std::array<CyclotomicInt, 3> conjugates(const CyclotomicInt& a);

struct PellPair {
    int j = 0;
    i128 l = 1;
    i128 k = 0;
};
PellPair pell(int j);  // (2+sqrt(3))^j = l + k sqrt(3); negative j uses the inverse

CyclotomicInt unit_mul(const CyclotomicInt& a, int j);
CyclotomicInt torsion_mul(const CyclotomicInt& a, int i);

enum class CosetHalf { Plus, Swap };

struct Coset {
    CyclotomicInt leader;  // canonical: minimal area, m,n >= 0, f >= e >= d, lex least
    i64 r = 0;
    i64 sig_a = 0, sig_b = 0;  // signature of the plus-half
    bool degenerate = false;   // every member of one half has zero area
};

// Member of the coset at index j.  Swap-half members are the plus-half member
// multiplied by (zeta + zeta^2); index 0 is the leader.
CyclotomicInt coset_member(const Coset& c, int j, CosetHalf half = CosetHalf::Plus);

// Canonical coset of an arbitrary nonzero element.
Coset leader_of(const CyclotomicInt& a);

// Solvability of N(alpha) = r per the prime-decomposition shape: exponents of
// 2, 3 and primes = 5, 7, 11 (mod 12) must be even.
bool norm_solvable(i64 r);

// All solution cosets of N(alpha) = r: orbits of the solution set under
// torsion, the fundamental unit, the (zeta+zeta^2) swap and the three
// conjugations.  Leaders returned in lexicographic order.
std::vector<Coset> solve_norm_equation(i64 r);

// Closed-form coset count for factorization shapes covered by the counting
// theorems; nullopt when no implemented closed form applies.
std::optional<i64> coset_count_formula(i64 r);

// Spreading number: coset count for r = p^rho, p = 1 (mod 12).
i64 spreading_number(int rho);

struct CosetFamily {
    ClassLabel label = ClassLabel::A;
    std::vector<Coset> cosets;
    // Alignment per coset: (half, reflected, index shift) presenting the
    // family's shared area sequence.
    struct Alignment {
        CosetHalf half = CosetHalf::Plus;
        bool reflected = false;
        int shift = 0;
    };
    std::vector<Alignment> alignments;
    std::vector<i64> areas;  // aligned area sequence over the comparison window
};

std::vector<CosetFamily> classify_families(i64 r, int window = 6, int shift_range = 6);

// Eventual-minimality index: smallest j* >= 0 such that every member with
// j* <= |j| <= horizon (both halves) is an M-triangle for its own shortest
// squared side.  Horizon is the largest |j| whose members stay inside the
// min-area table.  Throws if the horizon cannot certify any j*.
struct JStarResult {
    int j_star = 0;
    int horizon = 0;
};
JStarResult j_star(const Coset& c, const MinAreaTable& table);

// Upper bound of Lemma 5.1: log_{2+sqrt(3)}(3200 r^{3/2}).
double j_star_bound(i64 r);

}  // namespace hc
