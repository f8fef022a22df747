#include "hc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "hc/factor.hpp"

namespace hc {

namespace {

i64 checked(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw OverflowError(what);
    return i64(v);
}

struct TS {
    i128 t = 0;
    i128 s = 0;  // signed doubled area
};

TS tvals(const CyclotomicInt& q) {
    const i128 m = q.m, n = q.n, k = q.k, l = q.l;
    return {m * m + n * n + k * k + l * l - m * k - n * l, n * k - m * l};
}

i128 norm128(const CyclotomicInt& q) {
    const TS v = tvals(q);
    return v.t * v.t - 3 * v.s * v.s;
}

}  // namespace

CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b) {
    // row(b) times the multiplication matrix of a (Z-linear in both factors).
    const i128 m = a.m, n = a.n, k = a.k, l = a.l;
    const i128 T[4][4] = {{k, l, k - m, l - n},
                          {-l, k, n - l, k - m},
                          {m - k, n - l, m, n},
                          {l - n, m - k, -n, m}};
    const i128 v[4] = {b.m, b.n, b.k, b.l};
    i128 out[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[j] += v[i] * T[i][j];
    return {checked(out[0], "mul overflow"), checked(out[1], "mul overflow"),
            checked(out[2], "mul overflow"), checked(out[3], "mul overflow")};
}

i64 norm(const CyclotomicInt& q) {
    const i128 m = q.m, n = q.n, k = q.k, l = q.l;
    // form (5.8.1): a^2 + b^2 + a b over the raw signature quantities
    const i128 av = 2 * m * k + 2 * n * l - m * m - n * n;
    const i128 bv = m * m + n * n - k * k - l * l;
    const i128 r1 = av * av + bv * bv + av * bv;
    // form (5.8.2): g^2 + h^2
    const i128 gv = m * m - n * n + k * k - l * l - m * k + n * l;
    const i128 hv = 2 * m * n + 2 * k * l - m * l - n * k;
    const i128 r2 = gv * gv + hv * hv;
    // form (5.8.3): t^2 - 3 s^2
    const i128 r3 = norm128(q);
    if (r1 != r2 || r2 != r3)
        throw std::logic_error("norm representations disagree");
    if (r3 < 0) throw std::logic_error("negative norm");
    return checked(r3, "norm overflow");
}

std::array<CyclotomicInt, 3> conjugates(const CyclotomicInt& q) {
    return {CyclotomicInt{q.m, -q.n, q.k, -q.l}, CyclotomicInt{q.k, q.l, q.m, q.n},
            CyclotomicInt{q.k, -q.l, q.m, -q.n}};
}

PellPair pell(int j) {
    PellPair out;
    out.j = j;
    i128 l = 1, k = 0;
    for (int i = 0; i < std::abs(j); ++i) {
        const i128 nl = 2 * l + 3 * k;
        const i128 nk = l + 2 * k;
        l = nl;
        k = nk;
    }
    out.l = l;
    out.k = j >= 0 ? k : -k;
    return out;
}

CyclotomicInt unit_mul(const CyclotomicInt& a, int j) {
    CyclotomicInt cur = a;
    const CyclotomicInt& u = j >= 0 ? kPellUnit : kPellInv;
    for (int i = 0; i < std::abs(j); ++i) cur = mul(cur, u);
    return cur;
}

CyclotomicInt torsion_mul(const CyclotomicInt& a, int i) {
    int r = i % 12;
    if (r < 0) r += 12;
    CyclotomicInt cur = a;
    for (int p = 0; p < r; ++p) cur = mul(cur, kZeta);
    return cur;
}

namespace {

i64 abs_area(const CyclotomicInt& q) {
    const i128 s = tvals(q).s;
    return checked(s < 0 ? -s : s, "area overflow");
}

// Full orbit of q under torsion, conjugations, swap and the fundamental unit,
// restricted to the box t^2 <= 64 r (which keeps the orbit finite while
// leaving every coset connected inside the box).
std::set<CyclotomicInt> coset_orbit(const CyclotomicInt& q) {
    const i128 r = norm128(q);
    std::set<CyclotomicInt> seen;
    std::deque<CyclotomicInt> work{q};
    while (!work.empty()) {
        const CyclotomicInt cur = work.front();
        work.pop_front();
        if (seen.count(cur)) continue;
        seen.insert(cur);
        const CyclotomicInt next[6] = {mul(cur, kZeta),
                                       {cur.m, -cur.n, cur.k, -cur.l},
                                       {cur.k, cur.l, cur.m, cur.n},
                                       mul(cur, kSwapUnit),
                                       mul(cur, kPellUnit),
                                       mul(cur, kPellInv)};
        for (const auto& x : next) {
            const i128 t = tvals(x).t;
            if (t * t <= 64 * r && !seen.count(x)) work.push_back(x);
        }
    }
    return seen;
}

Coset make_coset(const std::set<CyclotomicInt>& orbit) {
    i64 min_area = INT64_MAX;
    for (const auto& x : orbit) min_area = std::min(min_area, abs_area(x));
    std::vector<CyclotomicInt> cands;
    for (const auto& x : orbit) {
        if (abs_area(x) != min_area) continue;
        const auto mt = metrics(x);
        if (x.m >= 0 && x.n >= 0 && mt.f >= mt.e && mt.e >= mt.d) cands.push_back(x);
    }
    Coset c;
    c.leader = *std::min_element(cands.begin(), cands.end());
    c.r = norm(c.leader);
    const auto mt = metrics(c.leader);
    c.sig_a = mt.a;
    c.sig_b = mt.b;
    c.degenerate = min_area == 0 && abs_area(mul(c.leader, kPellUnit)) == 0;
    return c;
}

}  // namespace

CyclotomicInt coset_member(const Coset& c, int j, CosetHalf half) {
    CyclotomicInt q = unit_mul(c.leader, j);
    if (half == CosetHalf::Swap) q = mul(q, kSwapUnit);
    return q;
}

Coset leader_of(const CyclotomicInt& a) {
    if (norm128(a) == 0) throw std::invalid_argument("leader_of: zero norm");
    // walk down to the box first
    CyclotomicInt cur = a;
    const i128 r = norm128(a);
    while (true) {
        const i128 t = tvals(cur).t;
        if (t * t <= 64 * r) break;
        const CyclotomicInt down = mul(cur, kPellInv);
        const CyclotomicInt up = mul(cur, kPellUnit);
        cur = tvals(down).t < tvals(up).t ? down : up;
    }
    return make_coset(coset_orbit(cur));
}

bool norm_solvable(i64 r) {
    if (r < 1) return false;
    if (r > i64(1000000000000LL)) throw std::invalid_argument("norm_solvable: r above ceiling");
    for (const auto& [p, e] : factorize(std::uint64_t(r))) {
        const auto residue = p % 12;
        if (p == 2 || p == 3 || residue == 5 || residue == 7 || residue == 11) {
            if (e % 2 != 0) return false;
        }
    }
    return true;
}

std::vector<Coset> solve_norm_equation(i64 r) {
    if (r < 1) throw std::invalid_argument("solve_norm_equation: r must be >= 1");
    if (!norm_solvable(r)) return {};
    // Leader box: t < 2 sqrt(r).  t is a positive definite quadratic form, so
    //   (3/4) k^2 <= t,  (m - k/2)^2 <= t  (and the n,l analogues).
    const double tb = 2.0 * std::sqrt(double(r));
    const auto kb = i64(std::sqrt(tb * 4.0 / 3.0)) + 1;
    std::set<CyclotomicInt> claimed;
    std::vector<Coset> out;
    for (i64 k = -kb; k <= kb; ++k) {
        for (i64 l = -kb; l <= kb; ++l) {
            const double rem0 = tb - 0.75 * double(k * k + l * l);
            if (rem0 <= 0) continue;
            const double wn = std::sqrt(rem0);
            for (i64 n = i64(std::floor(double(l) / 2 - wn)) - 1;
                 n <= i64(std::ceil(double(l) / 2 + wn)) + 1; ++n) {
                const double rem1 = rem0 - (double(n) - double(l) / 2) * (double(n) - double(l) / 2);
                if (rem1 <= 0) continue;
                const double wm = std::sqrt(rem1);
                for (i64 m = i64(std::floor(double(k) / 2 - wm)) - 1;
                     m <= i64(std::ceil(double(k) / 2 + wm)) + 1; ++m) {
                    const CyclotomicInt q{m, n, k, l};
                    if (norm128(q) != r) continue;
                    if (claimed.count(q)) continue;
                    const auto orbit = coset_orbit(q);
                    claimed.insert(orbit.begin(), orbit.end());
                    out.push_back(make_coset(orbit));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Coset& x, const Coset& y) { return x.leader < y.leader; });
    return out;
}

i64 spreading_number(int rho) {
    const i64 p = rho;
    return (p + 2) * (2 * p * p + 8 * p + 15 + 9 * (rho % 2 == 0 ? 1 : -1)) / 48;
}

std::optional<i64> coset_count_formula(i64 r) {
    if (r < 1) return std::nullopt;
    const auto fac = factorize(std::uint64_t(r));
    std::vector<int> ps, qs, ws, zs;  // exponents; q/w/z store half the even exponent
    for (const auto& [p, e] : fac) {
        if (p == 2 || p == 3) {
            if (e % 2 != 0) return 0;
            continue;  // powers of 2 and 3 never change the count
        }
        switch (p % 12) {
            case 1: ps.push_back(e); break;
            case 11:
                if (e % 2) return 0;
                qs.push_back(e / 2);
                break;
            case 5:
                if (e % 2) return 0;
                ws.push_back(e / 2);
                break;
            case 7:
                if (e % 2) return 0;
                zs.push_back(e / 2);
                break;
            default: return 0;  // unreachable for p > 3
        }
    }
    const auto sum = [](const std::vector<int>& v) {
        i64 s = 0;
        for (int x : v) s += x;
        return s;
    };
    const i64 sp = sum(ps), sq = sum(qs), sw = sum(ws), sz = sum(zs);
    if (sp + sq + sw + sz == 0) return 1;
    // single prime = 1 (mod 12): the spreading number
    if (qs.empty() && ws.empty() && zs.empty() && ps.size() == 1) return spreading_number(ps[0]);
    // pure prime powers of the self-conjugate kinds
    if (ps.empty() && sq + sw + sz == std::max({sq, sw, sz})) {
        if (qs.size() == 1 && ws.empty() && zs.empty()) return qs[0] / 2 + 1;
        if (ws.size() == 1 && qs.empty() && zs.empty()) return ws[0] / 2 + 1;
        if (zs.size() == 1 && qs.empty() && ws.empty()) return zs[0] / 2 + 1;
    }
    const bool p_simple = std::all_of(ps.begin(), ps.end(), [](int e) { return e == 1; });
    // Class A shape: at most one of p/w/z present, each to the first power,
    // arbitrary q's
    if (sp + sw + sz <= 1 && p_simple) {
        if (sp + sw + sz + sq <= 1) return 1;
        if (std::all_of(qs.begin(), qs.end(), [](int e) { return e == 1; }))
            return i64(1) << (sp + sw + sz + sq - 1);
        if (qs.size() == 1 && sp + sw + sz == 0) return qs[0] / 2 + 1;
        if (qs.size() == 1 && sp + sw + sz == 1) return qs[0] + 1;
    }
    // single p times single z^2 (one B1 family of two cosets)
    if (p_simple && ps.size() == 1 && qs.empty() && ws.empty() && zs.size() == 1 && zs[0] == 1)
        return 2;
    // single p times single w^2 (one B0 family of two cosets)
    if (p_simple && ps.size() == 1 && qs.empty() && zs.empty() && ws.size() == 1 && ws[0] == 1)
        return 2;
    return std::nullopt;
}

namespace {

std::vector<i64> area_window(const Coset& c, CosetHalf half, bool reflected, int shift,
                             int window) {
    std::vector<i64> out;
    out.reserve(std::size_t(2 * window + 1));
    for (int j = -window; j <= window; ++j) {
        const int jj = (reflected ? -j : j) + shift;
        out.push_back(abs_area(coset_member(c, jj, half)));
    }
    return out;
}

TriangleType member_type(const Coset& c, CosetHalf half, bool reflected, int shift, int j) {
    const int jj = (reflected ? -j : j) + shift;
    return type_of(coset_member(c, jj, half));
}

}  // namespace

std::vector<CosetFamily> classify_families(i64 r, int window, int shift_range) {
    const auto cosets = solve_norm_equation(r);
    const int n = int(cosets.size());
    using Key = std::tuple<CosetHalf, bool, int>;
    std::vector<std::map<Key, std::vector<i64>>> pres(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (CosetHalf half : {CosetHalf::Plus, CosetHalf::Swap})
            for (bool refl : {false, true})
                for (int sh = -shift_range; sh <= shift_range; ++sh)
                    pres[std::size_t(i)][{half, refl, sh}] =
                        area_window(cosets[std::size_t(i)], half, refl, sh, window);

    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[std::size_t(i)] = i;
    auto find = [&](int x) {
        while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool matched = false;
            for (const auto& [ki, vi] : pres[std::size_t(i)]) {
                for (const auto& [kj, vj] : pres[std::size_t(j)])
                    if (vi == vj) {
                        matched = true;
                        break;
                    }
                if (matched) break;
            }
            if (matched) parent[std::size_t(find(j))] = find(i);
        }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);

    std::vector<CosetFamily> out;
    for (const auto& [root, idxs] : groups) {
        CosetFamily fam;
        for (int i : idxs) fam.cosets.push_back(cosets[std::size_t(i)]);
        if (idxs.size() == 1) {
            fam.label = ClassLabel::A;
            fam.alignments.push_back({CosetHalf::Plus, false, 0});
            fam.areas = area_window(cosets[std::size_t(idxs[0])], CosetHalf::Plus, false, 0, window);
            out.push_back(std::move(fam));
            continue;
        }
        // choose a reference presentation of the first coset all others match
        bool aligned_ok = false;
        std::vector<Key> chosen(idxs.size());
        for (const auto& [kr, vr] : pres[std::size_t(idxs[0])]) {
            chosen[0] = kr;
            bool all = true;
            for (std::size_t u = 1; u < idxs.size(); ++u) {
                bool got = false;
                for (const auto& [k2, v2] : pres[std::size_t(idxs[u])])
                    if (v2 == vr) {
                        chosen[u] = k2;
                        got = true;
                        break;
                    }
                if (!got) {
                    all = false;
                    break;
                }
            }
            if (all) {
                aligned_ok = true;
                fam.areas = vr;
                break;
            }
        }
        if (!aligned_ok)
            throw std::logic_error("classify_families: alignment failed within window");
        for (std::size_t u = 0; u < idxs.size(); ++u)
            fam.alignments.push_back(
                {std::get<0>(chosen[u]), std::get<1>(chosen[u]), std::get<2>(chosen[u])});
        // pairwise congruence at each aligned index, ignoring degenerate members
        bool all_congruent = true, none_congruent = true;
        for (std::size_t u = 0; u < idxs.size(); ++u)
            for (std::size_t v = u + 1; v < idxs.size(); ++v) {
                bool pair_congr = true;
                for (int j = -window; j <= window; ++j) {
                    if (fam.areas[std::size_t(j + window)] == 0) continue;
                    const auto tu = member_type(cosets[std::size_t(idxs[u])],
                                                std::get<0>(chosen[u]), std::get<1>(chosen[u]),
                                                std::get<2>(chosen[u]), j);
                    const auto tv = member_type(cosets[std::size_t(idxs[v])],
                                                std::get<0>(chosen[v]), std::get<1>(chosen[v]),
                                                std::get<2>(chosen[v]), j);
                    if (tu != tv) {
                        pair_congr = false;
                        break;
                    }
                }
                (pair_congr ? none_congruent : all_congruent) = false;
            }
        fam.label = all_congruent ? ClassLabel::B0
                                  : (none_congruent ? ClassLabel::B1 : ClassLabel::B2);
        out.push_back(std::move(fam));
    }
    std::sort(out.begin(), out.end(), [](const CosetFamily& a, const CosetFamily& b) {
        return a.cosets.front().leader < b.cosets.front().leader;
    });
    return out;
}

JStarResult j_star(const Coset& c, const MinAreaTable& table) {
    const i64 limit = table.max_d2();
    auto member_ok = [&](int j, CosetHalf half) -> std::optional<bool> {
        const CyclotomicInt q = coset_member(c, j, half);
        const i64 s = abs_area(q);
        if (s == 0) return true;  // degenerate members carry no constraint
        const TriangleType ty = type_of(q);
        if (ty.l0sq > limit) return std::nullopt;  // beyond the horizon
        if (!is_nonobtuse(q)) return false;
        return s == table.min_area(ty.l0sq);
    };
    // horizon: largest h such that all members with |j| <= h are inside the table
    int horizon = -1;
    for (int h = 0;; ++h) {
        bool in_range = true;
        for (CosetHalf half : {CosetHalf::Plus, CosetHalf::Swap})
            for (int j : {h, -h})
                if (!member_ok(j, half).has_value()) in_range = false;
        if (!in_range) break;
        horizon = h;
    }
    if (horizon < 0) throw std::runtime_error("j_star: horizon too small for this coset");
    // smallest j* with all |j| in [j*, horizon] minimal
    int jstar = horizon + 1;
    for (int h = horizon; h >= 0; --h) {
        bool ok = true;
        for (CosetHalf half : {CosetHalf::Plus, CosetHalf::Swap})
            for (int j : {h, -h})
                if (!member_ok(j, half).value_or(false)) ok = false;
        if (!ok) break;
        jstar = h;
    }
    if (jstar > horizon) throw std::runtime_error("j_star: no certified index within horizon");
    return {jstar, horizon};
}

double j_star_bound(i64 r) {
    return std::log(3200.0 * std::pow(double(r), 1.5)) / std::log(2.0 + std::sqrt(3.0));
}

}  // namespace hc
