#include "hc/factor.hpp"

#include <numeric>

namespace hc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic base set for 64-bit inputs
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            const u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<u64, int> factorize(u64 n) {
    std::map<u64, int> out;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0 && n > 1) {
            ++out[p];
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

}  // namespace hc
