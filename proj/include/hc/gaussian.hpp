// Sum-of-two-squares decompositions m = i^2 + j^2 with 0 <= j <= i,
// precomputed for all m up to a bound.  An integer is attainable as a squared
// exclusion distance iff its decomposition list is non-empty.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hc {

class GaussianTable {
  public:
    explicit GaussianTable(std::int64_t max_m);

    std::int64_t max_m() const { return max_m_; }
    bool attainable(std::int64_t m) const { return !decompositions(m).empty(); }
    const std::vector<std::pair<std::int32_t, std::int32_t>>& decompositions(std::int64_t m) const;

    // Attainable values in increasing order, up to and including bound.
    std::vector<std::int64_t> attainable_up_to(std::int64_t bound) const;
    // Smallest attainable value strictly greater than m, or -1 if none tabled.
    std::int64_t next_attainable(std::int64_t m) const;

  private:
    std::int64_t max_m_;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> lists_;
};

}  // namespace hc
