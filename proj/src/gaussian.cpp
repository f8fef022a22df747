#include "hc/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace hc {

GaussianTable::GaussianTable(std::int64_t max_m) : max_m_(max_m) {
    if (max_m < 1) throw std::invalid_argument("GaussianTable: max_m must be >= 1");
    lists_.resize(std::size_t(max_m) + 1);
    const auto imax = std::int64_t(std::sqrt(double(max_m))) + 1;
    for (std::int64_t i = 0; i <= imax; ++i) {
        if (i * i > max_m) break;
        for (std::int64_t j = 0; j <= i; ++j) {
            const std::int64_t m = i * i + j * j;
            if (m > max_m) break;
            lists_[std::size_t(m)].emplace_back(std::int32_t(i), std::int32_t(j));
        }
    }
}

const std::vector<std::pair<std::int32_t, std::int32_t>>& GaussianTable::decompositions(
    std::int64_t m) const {
    static const std::vector<std::pair<std::int32_t, std::int32_t>> kEmpty;
    if (m < 0 || m > max_m_) return kEmpty;
    return lists_[std::size_t(m)];
}

std::vector<std::int64_t> GaussianTable::attainable_up_to(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t m = 1; m <= bound && m <= max_m_; ++m)
        if (!lists_[std::size_t(m)].empty()) out.push_back(m);
    return out;
}

std::int64_t GaussianTable::next_attainable(std::int64_t m) const {
    for (std::int64_t v = m + 1; v <= max_m_; ++v)
        if (!lists_[std::size_t(v)].empty()) return v;
    return -1;
}

}  // namespace hc
