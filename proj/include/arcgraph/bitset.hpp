#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace arcgraph {

/// Fixed-length dynamic bitset over 64-bit words.
///
/// Bits past size() are always zero, so word-wise comparisons and popcounts
/// never see garbage in the tail word.
class Bitset {
  public:
    using word_type = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_{size}, words_((size + kWordBits - 1) / kWordBits, 0) {}

    static Bitset full(std::size_t size) {
        Bitset b(size);
        std::fill(b.words_.begin(), b.words_.end(), ~word_type{0});
        b.trim();
        return b;
    }

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] std::size_t word_count() const { return words_.size(); }
    [[nodiscard]] const word_type* data() const { return words_.data(); }
    [[nodiscard]] word_type* data() { return words_.data(); }

    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }
    void set(std::size_t i, bool value) { value ? set(i) : reset(i); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }
    [[nodiscard]] bool any() const { return !none(); }

    /// Index of the lowest set bit at or after `from`, or size() if none.
    [[nodiscard]] std::size_t find_next(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t wi = from / kWordBits;
        word_type w = words_[wi] & (~word_type{0} << (from % kWordBits));
        while (true) {
            if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return size_;
            w = words_[wi];
        }
    }
    [[nodiscard]] std::size_t find_first() const { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w != 0) {
                f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    [[nodiscard]] bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    [[nodiscard]] Bitset complement() const {
        Bitset b = *this;
        for (auto& w : b.words_) w = ~w;
        b.trim();
        return b;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Canonical subset order: smaller cardinality first, then the sorted
    /// element lists compared lexicographically.
    friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        if (auto c = a.count() <=> b.count(); c != 0) return c;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            word_type diff = a.words_[i] ^ b.words_[i];
            if (diff == 0) continue;
            word_type low = diff & (~diff + 1);
            return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::size_t hash() const {
        std::size_t h = size_;
        for (word_type w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

  private:
    void trim() {
        if (size_ % kWordBits != 0 && !words_.empty()) words_.back() &= (word_type{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

/// Canonical order on single-word subsets, same rule as Bitset's <=>.
inline bool canonical_less(std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & diff & (~diff + 1)) != 0;
}

}  // namespace arcgraph

template <>
struct std::hash<arcgraph::Bitset> {
    std::size_t operator()(const arcgraph::Bitset& b) const noexcept { return b.hash(); }
};
