#include "hc/sliding_scan.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hc {

namespace {

constexpr double kR3 = 1.7320508075688772935;

i64 isqrt64(i64 v) {
    if (v < 0) return -1;
    auto r = i64(std::sqrt(double(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Residues of the embedded sublattice: fine point (M,N) is an original-lattice
// site iff P*M = Q*N (mod Z); the table maps M mod Z to the N residue.
std::vector<i64> n1_table(const ZType& zt) {
    const i64 z = zt.z2();
    std::vector<i64> n1(std::size_t(z), -1);
    for (i64 m = 0; m < z; ++m)
        for (i64 n = 0; n < z; ++n)
            if ((zt.p * m - zt.q * n) % z == 0) {
                n1[std::size_t(m)] = n;
                break;
            }
    return n1;
}

LatticePoint fine_to_orig(const ZType& zt, i64 x, i64 y) {
    const i64 z = zt.z2();
    return {(zt.p * x - zt.q * y) / z, (zt.q * x + zt.p * y) / z};
}

std::pair<i64, i64> orig_to_fine(const ZType& zt, i64 a, i64 b) {
    return {a * zt.p + b * zt.q, -a * zt.q + b * zt.p};
}

}  // namespace

std::vector<ZType> required_ztypes() {
    return {{1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
}

std::vector<ZType> extended_ztypes() {
    return {{1, 0},  {1, 1},  {2, 1},  {3, 1},  {3, 2},  {4, 1},  {4, 3},  {5, 1},  {5, 2},
            {5, 3},  {5, 4},  {6, 1},  {6, 5},  {7, 1},  {7, 2},  {7, 3},  {7, 4},  {7, 5},
            {7, 6},  {8, 1},  {8, 3},  {8, 5},  {8, 6},  {8, 7},  {9, 1},  {9, 2},  {9, 4},
            {9, 5},  {9, 7},  {10, 1}, {10, 3}, {10, 5}, {11, 1}, {11, 2}, {11, 3}, {11, 4}};
}

std::vector<SlidingCandidate> candidates_for_x(const ZType& zt, i64 x) {
    const i64 z = zt.z2();
    if (x % z != 0 || x <= 0) return {};
    const auto n1 = n1_table(zt);
    std::vector<SlidingCandidate> out;
    // closed band X - 2Z <= 2M <= X - Z (the boundary values realize the small
    // sliding instances; the open band of the lemma would miss them)
    i64 m_lo = (x - 2 * z) / 2;
    if (2 * m_lo < x - 2 * z) ++m_lo;
    m_lo = std::max<i64>(m_lo, 0);
    const i64 m_hi = (x - z) / 2;  // floor
    for (i64 m = m_lo; m <= m_hi; ++m) {
        // smallest sublattice-admissible N at or above floor(sqrt(3) M)
        const i64 floor_n = i64(std::floor(kR3 * double(m)));
        i64 n0 = (floor_n / z) * z + n1[std::size_t(m % z)];
        if (n0 < floor_n) n0 += z;
        for (int k = 0; k < 3; ++k) {
            const i64 n = n0 + k * z;
            if (n <= 0) continue;
            if ((n - 1) * (n - 1) >= 3 * m * m + 8 * z * m + 4 * z * z) continue;
            SlidingCandidate c;
            c.zt = zt;
            c.x = x;
            c.m = m;
            c.n = n;
            c.s = x * n;
            const i64 oa = m * m + n * n;
            c.d = std::min(oa, x * x);
            if (c.s > 0) out.push_back(c);
            if (oa >= x * x) break;  // larger N only lengthens the slanted side
        }
    }
    return out;
}

std::vector<SlidingCandidate> enumerate_candidates(const ZType& zt, i64 max_d) {
    const i64 z = zt.z2();
    const i64 x_max = i64(std::ceil(std::sqrt(2.0 * double(z)) * double(max_d))) + 4 * z;
    std::vector<SlidingCandidate> out;
    for (i64 x = z; x <= x_max; x += z) {
        auto cs = candidates_for_x(zt, x);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

std::optional<LatticeTriangle> find_improvement(const SlidingCandidate& c, int row_depth,
                                                int col_limit) {
    const i64 z = c.zt.z2();
    const auto n1 = n1_table(c.zt);
    for (int row = 1; row <= row_depth; ++row) {
        const i64 x = c.x - row;
        if (x < 0) break;
        // first sublattice column entry at or below the admissibility circle
        const i64 rem = c.d - x * x;
        i64 y0 = 0;
        if (rem > 0) y0 = (isqrt64(rem) / z) * z;
        i64 y = y0 + n1[std::size_t(x % z)];
        for (int col = 0; col < col_limit; ++col, y += z) {
            if (y <= 0) continue;
            if (x * x + y * y < c.d) continue;
            // equilateral apex over base (0,0)-(x,y), snapped to the corners
            // of the original-lattice unit square containing it
            const double dm = (double(x) - kR3 * double(y)) / 2.0;
            const double dn = (kR3 * double(x) + double(y)) / 2.0;
            const double zf = double(z);
            const i64 om = i64(std::floor((dm * double(c.zt.p) - dn * double(c.zt.q)) / zf));
            const i64 on = i64(std::floor((dm * double(c.zt.q) + dn * double(c.zt.p)) / zf));
            for (int u = 0; u <= 1; ++u) {
                for (int v = 0; v <= 1; ++v) {
                    const auto [fm, fn] = orig_to_fine(c.zt, om + u, on + v);
                    const i64 s = std::abs(x * fn - y * fm);
                    if (s >= c.s || s == 0) continue;
                    const i64 d1 = fm * fm + fn * fn;
                    const i64 d2 = x * x + y * y;
                    const i64 d3 = (x - fm) * (x - fm) + (y - fn) * (y - fn);
                    if (d1 >= c.d && d2 >= c.d && d3 >= c.d)
                        return LatticeTriangle{x, y, fm, fn};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

bool trapeze_triangles_admissible(const SlidingCandidate& c) {
    const i64 z = c.zt.z2();
    const i64 sides1[3] = {c.m * c.m + c.n * c.n, c.x * c.x,
                           (c.x - c.m) * (c.x - c.m) + c.n * c.n};
    const i64 b = c.m + z;
    const i64 sides2[3] = {b * b + c.n * c.n, c.x * c.x, (c.x - b) * (c.x - b) + c.n * c.n};
    for (const auto& s : {sides1, sides2}) {
        i64 v[3] = {s[0], s[1], s[2]};
        std::sort(v, v + 3);
        if (v[0] < c.d) return false;
        if (v[0] + v[1] < v[2]) return false;  // obtuse
    }
    return true;
}

}  // namespace

bool verify_sliding(const SlidingCandidate& c) {
    const i64 z = c.zt.z2();
    if (c.d % z != 0 || c.s % z != 0) return false;
    if (!trapeze_triangles_admissible(c)) return false;
    return min_doubled_area(c.d / z) == c.s / z;
}

SlidingRow present_sliding_row(i64 d2, i64 s, LatticePoint base,
                               std::vector<LatticePoint> apexes) {
    SlidingRow best;
    bool have = false;
    for (int rot = 0; rot < 4; ++rot) {
        for (int refl = 0; refl < 2; ++refl) {
            auto tr = [&](LatticePoint p) {
                for (int i = 0; i < rot; ++i) p = {-p.y, p.x};
                if (refl) p = {p.x, -p.y};
                return p;
            };
            const LatticePoint b = tr(base);
            if (!(0 <= b.y && b.y <= b.x)) continue;
            std::vector<LatticePoint> aps;
            bool ccw = true;
            for (const auto& a : apexes) {
                const LatticePoint t = tr(a);
                if (b.x * t.y - b.y * t.x <= 0) ccw = false;
                aps.push_back(t);
            }
            if (!ccw) continue;
            std::sort(aps.begin(), aps.end());
            SlidingRow row;
            row.d2 = d2;
            row.s = s;
            row.w = {b.y, -b.x};
            for (const auto& a : aps) row.apexes.push_back({a.y, -a.x});
            if (!have || std::pair{row.w, row.apexes} < std::pair{best.w, best.apexes}) {
                best = row;
                have = true;
            }
        }
    }
    if (!have) throw std::logic_error("present_sliding_row: no orientation fits");
    return best;
}

ScanInstance to_instance(const SlidingCandidate& c) {
    const i64 z = c.zt.z2();
    ScanInstance inst;
    inst.zt = c.zt;
    inst.x = c.x;
    inst.d2 = c.d / z;
    inst.s = c.s / z;
    const LatticePoint w = fine_to_orig(c.zt, c.x, 0);
    const LatticePoint a0 = fine_to_orig(c.zt, c.m, c.n);
    // expand the apex family: slide by the (P,Q) step while the triangle stays
    // admissible and nonobtuse
    auto ok = [&](const LatticePoint& a) {
        const i64 s1 = a.x * a.x + a.y * a.y;
        const i64 s2 = (a.x - w.x) * (a.x - w.x) + (a.y - w.y) * (a.y - w.y);
        i64 v[3] = {s1, s2, w.x * w.x + w.y * w.y};
        std::sort(v, v + 3);
        return v[0] >= inst.d2 && v[0] + v[1] >= v[2];
    };
    std::vector<LatticePoint> apexes;
    LatticePoint cur = a0;
    while (ok(cur)) {
        apexes.push_back(cur);
        cur = {cur.x - c.zt.p, cur.y - c.zt.q};
    }
    std::reverse(apexes.begin(), apexes.end());
    cur = {a0.x + c.zt.p, a0.y + c.zt.q};
    while (ok(cur)) {
        apexes.push_back(cur);
        cur = {cur.x + c.zt.p, cur.y + c.zt.q};
    }
    const SlidingRow row = present_sliding_row(inst.d2, inst.s, w, apexes);
    inst.w = row.w;
    inst.apexes = row.apexes;
    return inst;
}

namespace {

std::vector<ScanInstance> scan_range(const ZType& zt, i64 x_lo, i64 x_hi, i64 max_d,
                                     const ScanParams& params) {
    std::vector<ScanInstance> out;
    const i64 z = zt.z2();
    for (i64 x = x_lo; x <= x_hi; x += z) {
        for (const auto& c : candidates_for_x(zt, x)) {
            if (c.d > z * max_d * max_d) continue;
            if (find_improvement(c, params.row_depth, params.col_limit)) continue;
            if (!verify_sliding(c)) continue;
            out.push_back(to_instance(c));
        }
    }
    return out;
}

std::string serialize_instance(const ScanInstance& inst) {
    std::ostringstream os;
    os << inst.d2 << ',' << inst.w.x << ',' << inst.w.y << ',' << inst.s << ',' << inst.x;
    for (const auto& a : inst.apexes) os << ',' << a.x << ',' << a.y;
    return os.str();
}

ScanInstance parse_instance(const std::string& text, const ZType& zt) {
    std::istringstream is(text);
    std::string tok;
    std::vector<i64> vals;
    while (std::getline(is, tok, ',')) vals.push_back(std::stoll(tok));
    if (vals.size() < 5 || (vals.size() - 5) % 2 != 0)
        throw std::runtime_error("checkpoint: malformed instance record");
    ScanInstance inst;
    inst.zt = zt;
    inst.d2 = vals[0];
    inst.w = {vals[1], vals[2]};
    inst.s = vals[3];
    inst.x = vals[4];
    for (std::size_t i = 5; i < vals.size(); i += 2) inst.apexes.push_back({vals[i], vals[i + 1]});
    return inst;
}

}  // namespace

void append_checkpoint(const std::string& path, const CheckpointShard& shard) {
    std::ofstream os(path, std::ios::app);
    if (!os) throw std::runtime_error("checkpoint: cannot open " + path);
    os << shard.zt.p << '\t' << shard.zt.q << '\t' << shard.x_lo << '\t' << shard.x_hi << '\t'
       << shard.instances.size();
    for (const auto& inst : shard.instances) os << '\t' << serialize_instance(inst);
    os << '\n';
}

std::vector<CheckpointShard> load_checkpoint(const std::string& path) {
    std::vector<CheckpointShard> out;
    std::ifstream is(path);
    if (!is) return out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        CheckpointShard shard;
        std::size_t count = 0;
        std::string tok;
        if (!std::getline(ls, tok, '\t')) throw std::runtime_error("checkpoint: bad line");
        shard.zt.p = std::stoll(tok);
        std::getline(ls, tok, '\t');
        shard.zt.q = std::stoll(tok);
        std::getline(ls, tok, '\t');
        shard.x_lo = std::stoll(tok);
        std::getline(ls, tok, '\t');
        shard.x_hi = std::stoll(tok);
        std::getline(ls, tok, '\t');
        count = std::stoul(tok);
        for (std::size_t i = 0; i < count; ++i) {
            if (!std::getline(ls, tok, '\t'))
                throw std::runtime_error("checkpoint: truncated instance list");
            shard.instances.push_back(parse_instance(tok, shard.zt));
        }
        out.push_back(std::move(shard));
    }
    return out;
}

std::vector<ScanInstance> scan(const ZType& zt, i64 max_d, const ScanParams& params) {
    if (std::gcd(zt.p, zt.q) != 1 || zt.z2() < 1)
        throw std::invalid_argument("scan: (p,q) must be coprime");
    const i64 z = zt.z2();
    const i64 x_max = i64(std::ceil(std::sqrt(2.0 * double(z)) * double(max_d))) + 4 * z;

    std::vector<ScanInstance> found;
    std::set<std::pair<i64, i64>> done_ranges;
    if (!params.checkpoint_path.empty()) {
        for (const auto& shard : load_checkpoint(params.checkpoint_path)) {
            if (!(shard.zt == zt)) continue;
            done_ranges.insert({shard.x_lo, shard.x_hi});
            found.insert(found.end(), shard.instances.begin(), shard.instances.end());
        }
    }

    std::vector<std::pair<i64, i64>> ranges;
    for (i64 lo = z; lo <= x_max; lo += params.shard_width * z) {
        const i64 hi = std::min(x_max, lo + params.shard_width * z - z);
        if (!done_ranges.count({lo, hi})) ranges.emplace_back(lo, hi);
    }

    std::mutex mtx;
    std::size_t next = 0;
    const int nthreads = std::max(1, params.threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t idx;
                {
                    std::lock_guard<std::mutex> lk(mtx);
                    if (next >= ranges.size()) return;
                    idx = next++;
                }
                const auto [lo, hi] = ranges[idx];
                auto part = scan_range(zt, lo, hi, max_d, params);
                std::lock_guard<std::mutex> lk(mtx);
                if (!params.checkpoint_path.empty())
                    append_checkpoint(params.checkpoint_path, {zt, lo, hi, part});
                found.insert(found.end(), part.begin(), part.end());
            }
        });
    }
    for (auto& th : pool) th.join();

    // dedup (resume overlap or the symmetric trapeze found twice never occurs,
    // but keep the merge associative) and sort
    std::sort(found.begin(), found.end(), [](const ScanInstance& a, const ScanInstance& b) {
        return std::tuple{a.d2, a.w, a.apexes} < std::tuple{b.d2, b.w, b.apexes};
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const ScanInstance& a, const ScanInstance& b) {
                                return a.d2 == b.d2 && a.w == b.w && a.apexes == b.apexes;
                            }),
                found.end());
    // keep only instances within the requested exclusion bound
    std::vector<ScanInstance> out;
    for (auto& inst : found)
        if (inst.d2 <= max_d * max_d) out.push_back(std::move(inst));
    return out;
}

bool scaled_check(const ScanInstance& inst, int k) {
    if (k < 1) throw std::invalid_argument("scaled_check: k must be >= 1");
    const i64 kk = i64(k) * k;
    return min_doubled_area(kk * inst.d2) < kk * inst.s;
}

}  // namespace hc
