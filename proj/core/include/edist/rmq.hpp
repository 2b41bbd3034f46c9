#ifndef EDIST_RMQ_HPP
#define EDIST_RMQ_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace edist {

// Dyadic range-minimum index. Precomputes minima of all power-of-two
// intervals in O(m log m); an arbitrary interval minimum is then the min of
// two overlapping dyadic intervals.
template <typename T>
class RangeMinIndex {
public:
    RangeMinIndex() = default;

    explicit RangeMinIndex(const std::vector<T>& values) { build(values); }

    void build(const std::vector<T>& values) {
        if (values.empty())
            throw std::invalid_argument("RangeMinIndex: empty input");
        n_ = values.size();
        const int levels = std::bit_width(n_);
        table_.assign(levels, {});
        table_[0] = values;
        for (int k = 1; k < levels; ++k) {
            const std::size_t len = std::size_t{1} << k;
            table_[k].resize(n_ - len + 1);
            const auto& prev = table_[k - 1];
            for (std::size_t i = 0; i + len <= n_; ++i)
                table_[k][i] = std::min(prev[i], prev[i + len / 2]);
        }
    }

    std::size_t size() const { return n_; }

    // Minimum of values[lo..hi], inclusive bounds, 0 <= lo <= hi < size().
    T min(std::size_t lo, std::size_t hi) const {
        const int k = std::bit_width(hi - lo + 1) - 1;
        return std::min(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<T>> table_;
};

}  // namespace edist

#endif
