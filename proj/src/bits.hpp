#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace oddgrid {

// Dynamic bitset sized once at construction. The solver keeps one of these
// per adjacency row and a handful of working sets, so the operations that
// matter are whole-word AND/OR and set-bit iteration.
class Bits {
public:
    Bits() : nbits_(0) {}
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    int words() const { return static_cast<int>(w_.size()); }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool operator==(const Bits& o) const = default;

    int find_first() const { return find_next(-1); }

    // First set bit strictly after position i, or size() if none.
    int find_next(int i) const {
        int word = (i + 1) >> 6;
        if (word >= words()) return nbits_;
        uint64_t cur = w_[word] & (~uint64_t{0} << ((i + 1) & 63));
        while (true) {
            if (cur) return (word << 6) + std::countr_zero(cur);
            if (++word >= words()) return nbits_;
            cur = w_[word];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int word = 0; word < words(); ++word) {
            uint64_t cur = w_[word];
            while (cur) {
                int b = std::countr_zero(cur);
                f((word << 6) + b);
                cur &= cur - 1;
            }
        }
    }

    const uint64_t* data() const { return w_.data(); }
    uint64_t* data() { return w_.data(); }

private:
    int nbits_;
    std::vector<uint64_t> w_;
};

} // namespace oddgrid
