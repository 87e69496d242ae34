#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace bisetring {

// Dynamic bitset over 64-bit words. Size is fixed at construction;
// binary operations require equal sizes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool none() const {
        for (auto w : w_) if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    // index of lowest set bit, or size() if none
    std::size_t first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + __builtin_ctzll(w_[i]);
        return n_;
    }

    // lowest set bit strictly above i, or size() if none
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= n_) return n_;
        std::size_t word = i >> 6;
        std::uint64_t w = w_[word] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return word * 64 + __builtin_ctzll(w);
            if (++word == w_.size()) return n_;
            w = w_[word];
        }
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

    bool contains(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & w_[i]) return true;
        return false;
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t i = first(); i < n_; i = next(i)) out.push_back(std::uint32_t(i));
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = first(); i < n_; i = next(i)) fn(std::uint32_t(i));
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace bisetring
