#pragma once

#include <cstdint>
#include <vector>

#if defined(_MSC_VER)
#include <intrin.h>
#endif

namespace turan {

namespace detail {

inline int popcount64(std::uint64_t w) {
#if defined(_MSC_VER)
    return static_cast<int>(__popcnt64(w));
#else
    return __builtin_popcountll(w);
#endif
}

inline int ctz64(std::uint64_t w) {
#if defined(_MSC_VER)
    unsigned long idx;
    _BitScanForward64(&idx, w);
    return static_cast<int>(idx);
#else
    return __builtin_ctzll(w);
#endif
}

} // namespace detail

/// Fixed-width row of bits; the adjacency row type used by Graph.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int n) : words_((n + 63) / 64, 0), size_(n) {}

    int size() const { return size_; }

    bool test(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += detail::popcount64(w);
        return c;
    }

    /// Visit set bits in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * 64) + detail::ctz64(w));
                w &= w - 1;
            }
        }
    }

    /// Visit set bits strictly greater than lo, ascending.
    template <class F>
    void for_each_above(int lo, F&& f) const {
        int start = lo + 1;
        if (start < 0) start = 0;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        if (wi >= words_.size()) return;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            while (w) {
                f(static_cast<int>(wi * 64) + detail::ctz64(w));
                w &= w - 1;
            }
            if (++wi >= words_.size()) return;
            w = words_[wi];
        }
    }

    int intersection_count(const BitRow& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += detail::popcount64(words_[i] & other.words_[i]);
        return c;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const BitRow&) const = default;

private:
    std::vector<std::uint64_t> words_;
    int size_ = 0;
};

} // namespace turan
