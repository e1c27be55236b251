#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bruhat::detail {

// Fixed-size bitset sized at runtime; just enough for reachability rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }

    void set(std::size_t i) noexcept { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) noexcept { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1; }

    void or_with(const Bitset& o) noexcept {
        for (std::size_t t = 0; t < w_.size(); ++t) w_[t] |= o.w_[t];
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto v : w_) c += static_cast<std::size_t>(std::popcount(v));
        return c;
    }

    std::size_t count_and(const Bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t t = 0; t < w_.size(); ++t)
            c += static_cast<std::size_t>(std::popcount(w_[t] & o.w_[t]));
        return c;
    }

    // Calls f(index) for every set bit, in increasing index order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t t = 0; t < w_.size(); ++t) {
            std::uint64_t v = w_[t];
            while (v) {
                const int b = std::countr_zero(v);
                f(t * 64 + static_cast<std::size_t>(b));
                v &= v - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace bruhat::detail
