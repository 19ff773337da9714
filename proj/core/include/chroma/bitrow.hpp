#ifndef CHROMA_BITROW_HPP
#define CHROMA_BITROW_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace chroma {

// Fixed-width bit vector used for adjacency rows and GF(2) matrix rows.
// Word-parallel ops are the workhorse of the whole library.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int bits) : bits_(bits), w_(word_count(bits), 0) {}

    static BitRow all_set(int bits) {
        BitRow r(bits);
        for (auto& w : r.w_) w = ~std::uint64_t(0);
        r.trim();
        return r;
    }

    int bit_count() const { return bits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    BitRow& operator^=(const BitRow& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    BitRow& operator&=(const BitRow& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    int popcount() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool subset_of(const BitRow& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const BitRow& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    // Index of the lowest set bit, or -1.
    int find_first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    // Lowest set bit strictly after i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= bits_) return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(k * 64) + std::countr_zero(w);
            if (++k >= w_.size()) return -1;
            w = w_[k];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

    bool operator==(const BitRow&) const = default;

private:
    static std::size_t word_count(int bits) { return (std::size_t(bits) + 63) / 64; }

    // Keep bits past bits_ zero so equality and any() stay honest.
    void trim() {
        if (bits_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (bits_ & 63));
    }

    int bits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace chroma

#endif
