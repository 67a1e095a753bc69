#ifndef METDIM_BITS_HPP
#define METDIM_BITS_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace metdim {

// Dense bit row used for adjacency and small vertex sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    // popcount(this & o) without materialising the intersection.
    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    void or_with(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    void andnot_with(const Bits& o) {  // this &= ~o
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    // Smallest set index >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        size_t wi = from >> 6;
        uint64_t w = w_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                int b = int(wi * 64) + std::countr_zero(w);
                return b < n_ ? b : -1;
            }
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    // Visits set bits in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                f(int(wi * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace metdim

#endif  // METDIM_BITS_HPP
