#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loom {

/// Fixed-size dynamic bitset sized at construction. All binary operations
/// require equal sizes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) { // set difference
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    /// Lowest set bit, or -1 when empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
        return -1;
    }
    /// Lowest set bit strictly above i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64 + __builtin_ctzll(w));
            if (++k >= w_.size()) return -1;
            w = w_[k];
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

    /// Compares the two member lists lexicographically ({0,1,2} < {0,2} < {1}).
    static bool lex_less(const Bitset& a, const Bitset& b) {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return x < 0 && y >= 0; // proper prefix sorts first; equal sorts equal
    }

    struct Hash {
        size_t operator()(const Bitset& b) const {
            size_t h = size_t(b.n_) * 0x9e3779b97f4a7c15ull;
            for (uint64_t w : b.w_) h = (h ^ w) * 0x100000001b3ull;
            return h;
        }
    };

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// Unsigned big integer just large enough for permutation group orders:
/// multiply by machine words, compare, print.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(uint64_t v) {
        limbs_.push_back(uint32_t(v & 0xffffffffu));
        if (v >> 32) limbs_.push_back(uint32_t(v >> 32));
    }

    BigUint& operator*=(uint64_t m) {
        if (m == 0) { limbs_.assign(1, 0); return *this; }
        uint64_t lo = m & 0xffffffffu, hi = m >> 32;
        std::vector<uint32_t> r(limbs_.size() + 3, 0);
        mul_add(r, limbs_, lo, 0);
        if (hi) mul_add(r, limbs_, hi, 1);
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        limbs_ = std::move(r);
        return *this;
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator==(uint64_t v) const { return *this == BigUint(v); }
    bool operator!=(uint64_t v) const { return !(*this == v); }

    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t as_u64() const {
        uint64_t v = limbs_[0];
        if (limbs_.size() > 1) v |= uint64_t(limbs_[1]) << 32;
        return v;
    }

    std::string str() const {
        std::vector<uint32_t> t = limbs_;
        std::string out;
        while (t.size() > 1 || t[0] != 0) {
            uint64_t rem = 0;
            for (size_t i = t.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | t[i];
                t[i] = uint32_t(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (t.size() > 1 && t.back() == 0) t.pop_back();
            std::string chunk = std::to_string(rem);
            if (t.size() == 1 && t[0] == 0) {
                out = chunk + out;
            } else {
                out = std::string(9 - chunk.size(), '0') + chunk + out;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static void mul_add(std::vector<uint32_t>& r, const std::vector<uint32_t>& a,
                        uint64_t m, size_t shift) {
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size() || carry; ++i) {
            uint64_t cur = r[i + shift] + carry;
            if (i < a.size()) cur += uint64_t(a[i]) * m;
            r[i + shift] = uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }

    std::vector<uint32_t> limbs_; // little-endian base 2^32
};

} // namespace loom
