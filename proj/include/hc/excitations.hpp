// Counting local excitations of relative weight u^-2 for a min-area
// sublattice: 1..4-site insertions per fundamental parallelogram, both via
// the fixed shape polygons and via a direct translation-canonical census.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hc/lattice.hpp"

namespace hc {

class Sublattice {
  public:
    // e1, e2 must span a sublattice whose fundamental triangle is admissible
    // for d2 (all squared sides >= d2).  The basis is kept as given; shape
    // realization orders it by length internally.
    Sublattice(LatticePoint e1, LatticePoint e2, i64 d2);

    const LatticePoint& e1() const { return e1_; }
    const LatticePoint& e2() const { return e2_; }
    i64 d2() const { return d2_; }
    i64 det() const { return det_; }  // absolute value: sites per FP

    LatticePoint site(i64 a, i64 b) const;
    // Sublattice sites within the +-window basis cells around p.
    std::vector<LatticePoint> nearby_sites(const LatticePoint& p, int window = 3) const;
    // Sites at squared distance < d2 from p.
    std::vector<LatticePoint> repelled(const LatticePoint& p) const;
    bool is_site(const LatticePoint& p) const;

    // Integer points whose basis coordinates lie in [0,1)^2.
    std::vector<LatticePoint> fundamental_points() const;

    // Translate so the lexicographically least member lands in the FP.
    std::vector<LatticePoint> canonical_tuple(std::vector<LatticePoint> pts) const;

  private:
    LatticePoint e1_, e2_;
    i64 d2_;
    i64 det_raw_;
    i64 det_;
};

enum class ShapeKind { Triangle, Parallelogram, Trapeze, DoubleTriangle };

struct Shape {
    std::string name;
    ShapeKind kind;
    std::vector<std::pair<int, int>> vertices;  // in sublattice basis coordinates
};

// The eleven insertion-shape polygons (two triangles, five parallelograms,
// three trapezes, one double triangle).
const std::vector<Shape>& excitation_shapes();

// Z^2 points inside or on the shape polygon repelling exactly three
// sublattice sites, all three being polygon vertices.
std::vector<LatticePoint> admissible_points(const Shape& shape, const Sublattice& sub);

// Tuples built compositionally: pairs jointly repel exactly 4 sites; triples
// extend a pair by a mutually admissible point of the same trapeze; quadruples
// extend a trapeze-C triple by a triangle-shape point.
std::vector<std::vector<LatticePoint>> admissible_tuples(const Shape& shape,
                                                         const Sublattice& sub, int arity);

struct ExcitationReport {
    i64 singles = 0;
    i64 doubles = 0;
    i64 triples = 0;
    i64 quads = 0;
    i64 total = 0;
};

// Direct census: arity-tuples of mutually admissible insertion points (each
// repelling exactly 3 sites) jointly repelling exactly arity+2 sites, counted
// modulo sublattice translations.  Broader than the shape families: it also
// finds chain-shaped repelled patterns the shape polygons exclude.
i64 census_count(const Sublattice& sub, int arity);

// Report over the shape families: singles from the census, higher arities
// from the shape composition closed under inversion.
ExcitationReport count_excitations(const Sublattice& sub);

// Mutually admissible 5-point extensions of the quadruple classes jointly
// repelling exactly seven sites.  Zero for the reference sublattices.
i64 count_quintuple_extensions(const Sublattice& sub);

// Index of the report with strictly largest total; nullopt on a tie.
std::optional<std::size_t> dominance_compare(const std::vector<ExcitationReport>& reports);

}  // namespace hc
