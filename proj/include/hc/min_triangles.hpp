// Solving the minimal-area problem: for a squared exclusion distance d2, find
// the minimal doubled area of a nonobtuse Z^2 triangle with all squared sides
// >= d2, enumerate the minimizing triangle types and their Z^2-congruence
// classes, detect sliding, and classify d2 into S / A / B0 / B1 / B2.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hc/gaussian.hpp"
#include "hc/lattice.hpp"

namespace hc {

enum class ClassLabel { S, A, B0, B1, B2 };
std::string to_string(ClassLabel label);

enum class IsoKind { RightIsosceles, Isosceles, Scalene };

struct MinimalType {
    TriangleType type;
    std::vector<LatticeTriangle> implementations;  // canonical quads, one per class
    IsoKind kind = IsoKind::Scalene;
};

// One sliding configuration in the format of Table 2: a base endpoint W and
// the list of admissible apexes on one side of the base.
struct SlidingRow {
    i64 d2 = 0;
    LatticePoint w;
    std::vector<LatticePoint> apexes;
    i64 s = 0;
};

struct MinRecord {
    i64 d2 = 0;
    i64 s = 0;
    std::vector<MinimalType> types;
    ClassLabel label = ClassLabel::A;
    i64 pgs_count = 0;
    std::optional<i64> egm_count;            // defined only for Class A
    std::optional<SlidingRow> sliding;       // present iff label == S
};

// Minimal doubled area for one d2, via the base-and-window sweep restricted
// to the annulus of admissible shortest sides.  Works for any d2 that is a
// sum of two squares, with no precomputed table; d2 may be as large as the
// full-scale sliding scan requires (~4.4e15).
i64 min_doubled_area(i64 d2);

// All minimizing triangle types for d2, each with one canonical representative
// per Z^2-congruence class.
std::vector<MinimalType> minimal_triangles_for(i64 d2);

// Sliding detection for one d2: collects, per base vector, every integral apex
// position; reports sliding when two apexes on the same side generate distinct
// sublattices.  Returns the base with the most apexes, in canonical
// orientation.
std::optional<SlidingRow> detect_sliding(i64 d2);

MinRecord classify(i64 d2);

// Exhaustive oracle: enumerates every nonobtuse triangle with one vertex at
// the origin and no search-space shortcuts shared with min_doubled_area's
// acceptance filter.  Guarded by a ceiling because it is quadratic in area.
i64 brute_force_oracle(i64 d2, i64 ceiling = 500);

// Bulk sweep: S(d2) for every d2 <= max_d2 at once (suffix-min over window
// candidates).  Used by property suites and the eventual-minimality index.
class MinAreaTable {
  public:
    explicit MinAreaTable(i64 max_d2);

    i64 max_d2() const { return max_d2_; }
    // 0 if d2 is out of range; the minimal doubled area otherwise (defined for
    // every d2 >= 1, attainable or not: the constraint only reads sides >= d2).
    i64 min_area(i64 d2) const;

  private:
    i64 max_d2_;
    std::vector<std::int32_t> s_;
};

// Table emission with the papers' collapse convention: keep a record only if
// the next attainable d2 has different minimizing data.
struct TableOptions {
    bool collapse = false;
};
std::vector<MinRecord> classify_range(const GaussianTable& gt, i64 max_d2,
                                      const TableOptions& opt = {});

}  // namespace hc
