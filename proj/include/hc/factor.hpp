// Deterministic 64-bit factorization: Miller-Rabin + Pollard rho.
#pragma once

#include <cstdint>
#include <map>

namespace hc {

bool is_prime_u64(std::uint64_t n);

// Prime factorization n = prod p^e as a sorted map.
std::map<std::uint64_t, int> factorize(std::uint64_t n);

}  // namespace hc
