// The large-scale exhaustive sliding verification: enumerate candidate
// trapezes in the fine lattice of a coprime pair (P,Q), filter with the
// row-limited improvement search, then verify survivors exhaustively and map
// them back to original-lattice Table-2 records.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hc/lattice.hpp"
#include "hc/min_triangles.hpp"

namespace hc {

struct ZType {
    i64 p = 1;
    i64 q = 0;
    i64 z2() const { return p * p + q * q; }
    friend bool operator==(const ZType&, const ZType&) = default;
};

// The coprime types with z^2 < 14 suffice (no z-sliding above that).
std::vector<ZType> required_ztypes();
// The wider list the original scan also examined, up to (11,4).
std::vector<ZType> extended_ztypes();

// Trapeze (0,0) - (M,N) - (M+Z,N) - (X,0) in the fine lattice, all four
// vertices on the embedded sublattice; d and s carry fine-lattice units
// (original-lattice values are d/Z and s/Z).
struct SlidingCandidate {
    ZType zt;
    i64 x = 0;
    i64 m = 0;
    i64 n = 0;
    i64 d = 0;
    i64 s = 0;
};

struct ScanParams {
    int row_depth = 8;
    int col_limit = 10;
    int threads = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    i64 shard_width = 1 << 16;    // X values per checkpoint shard
};

// Candidates for one X (base endpoint (X,0), X a multiple of z^2).
std::vector<SlidingCandidate> candidates_for_x(const ZType& zt, i64 x);

// All candidates with original-lattice D <= max_d, in increasing X order.
std::vector<SlidingCandidate> enumerate_candidates(const ZType& zt, i64 max_d);

// Row-limited heuristic search for an admissible smaller-area triangle; the
// second vertex runs over fine columns X-1, X-2, ... restricted to the
// embedded sublattice, the third vertex over the unit-square corners around
// the equilateral apex.  Returns the improvement if one is found.
std::optional<LatticeTriangle> find_improvement(const SlidingCandidate& c, int row_depth = 8,
                                                int col_limit = 10);

// Exhaustive verification that both trapeze triangles are M-triangles.
bool verify_sliding(const SlidingCandidate& c);

// A verified instance mapped back to the original lattice, with the full apex
// list, in the canonical Table-2 presentation.
struct ScanInstance {
    i64 d2 = 0;
    LatticePoint w;
    std::vector<LatticePoint> apexes;
    i64 s = 0;
    ZType zt;
    i64 x = 0;  // fine-lattice base length of the discovering candidate
};

ScanInstance to_instance(const SlidingCandidate& c);

// Full pipeline: enumerate -> improvement filter -> exhaustive verification.
// Deterministic output sorted by (d2, w); resumable through the checkpoint.
std::vector<ScanInstance> scan(const ZType& zt, i64 max_d, const ScanParams& params = {});

// True iff the k-times magnified instance admits a strictly smaller admissible
// triangle, i.e. generates no sliding at scale k.
bool scaled_check(const ScanInstance& inst, int k);

// Canonical presentation shared with the desk-scale detector: base rotated to
// point "down", apexes on the positive-x side.
SlidingRow present_sliding_row(i64 d2, i64 s, LatticePoint base,
                               std::vector<LatticePoint> apexes);

// Checkpoint file access (tab-separated, one shard per line).
struct CheckpointShard {
    ZType zt;
    i64 x_lo = 0;
    i64 x_hi = 0;
    std::vector<ScanInstance> instances;
};
void append_checkpoint(const std::string& path, const CheckpointShard& shard);
std::vector<CheckpointShard> load_checkpoint(const std::string& path);

}  // namespace hc
