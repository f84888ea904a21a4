#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "imss/errors.hpp"

namespace imss {

/// Bit-packed binary code word. Bit i of the word lives in storage word i/64
/// at bit position i%64 (LSB-first). Project-wide symbol convention: bit 1
/// maps to the +1 query/store symbol, bit 0 to -1.
class BinaryVector {
public:
    BinaryVector() = default;

    explicit BinaryVector(std::size_t n_bits)
        : size_(n_bits), words_((n_bits + 63) / 64, 0) {}

    /// Parses "0100"-style strings; character 0 is bit 0.
    static BinaryVector from_string(const std::string& s) {
        BinaryVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                v.set(i, true);
            } else if (s[i] != '0') {
                throw ParseError("binary string may contain only '0' and '1'");
            }
        }
        return v;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const {
        if (i >= size_) throw IndexError("bit index out of range");
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        if (i >= size_) throw IndexError("bit index out of range");
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void push_back(bool value) {
        if (size_ % 64 == 0) words_.push_back(0);
        ++size_;
        set(size_ - 1, value);
    }

    /// Appends all bits of `other` after the current contents.
    void append(const BinaryVector& other) {
        for (std::size_t i = 0; i < other.size_; ++i) push_back(other.get(i));
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    BinaryVector complemented() const {
        BinaryVector v(size_);
        for (std::size_t w = 0; w < words_.size(); ++w) v.words_[w] = ~words_[w];
        v.mask_tail();
        return v;
    }

    /// Bits [first, first + count), zero-padded if the range runs past the end.
    BinaryVector slice(std::size_t first, std::size_t count) const {
        BinaryVector v(count);
        for (std::size_t i = 0; i < count && first + i < size_; ++i) {
            v.set(i, get(first + i));
        }
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BinaryVector& a, const BinaryVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    friend std::size_t hamming_distance(const BinaryVector& a, const BinaryVector& b);

private:
    void mask_tail() {
        if (size_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// popcount(a XOR b); symmetric, satisfies the triangle inequality.
inline std::size_t hamming_distance(const BinaryVector& a, const BinaryVector& b) {
    if (a.size_ != b.size_) {
        throw DimensionError("hamming_distance: operand lengths differ");
    }
    std::size_t n = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        n += std::popcount(a.words_[w] ^ b.words_[w]);
    }
    return n;
}

}  // namespace imss
