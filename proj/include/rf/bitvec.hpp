#ifndef RF_BITVEC_HPP
#define RF_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rf/errors.hpp"

namespace rf {

// Fixed-width bit vector. Bit i is bit (i % 64) of word i/64, so the
// hex serialization below is little-endian in bit order.
class BitVec {
public:
    BitVec() : size_(0) {}
    explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true) {
        if (v)
            words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const BitVec& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    BitVec& operator&=(const BitVec& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // this \ o
    BitVec& subtract(const BitVec& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    bool operator==(const BitVec& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool operator<(const BitVec& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        return words_ < o.words_;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < size_; ++i)
            if (get(i)) r.push_back(i);
        return r;
    }

    // Little-endian hex: character j holds bits [4j, 4j+4), bit 4j as the
    // least significant bit of the nibble.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s((size_ + 3) / 4, '0');
        for (std::size_t j = 0; j < s.size(); ++j) {
            unsigned nib = 0;
            for (unsigned b = 0; b < 4; ++b) {
                std::size_t i = 4 * j + b;
                if (i < size_ && get(i)) nib |= (1u << b);
            }
            s[j] = digits[nib];
        }
        return s;
    }

    static BitVec from_hex(const std::string& s, std::size_t n) {
        if (s.size() != (n + 3) / 4)
            throw DomainError("hex bit-vector has wrong length: expected " +
                              std::to_string((n + 3) / 4) + " digits, got " +
                              std::to_string(s.size()));
        BitVec v(n);
        for (std::size_t j = 0; j < s.size(); ++j) {
            char c = s[j];
            unsigned nib;
            if (c >= '0' && c <= '9')
                nib = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                nib = static_cast<unsigned>(c - 'a') + 10u;
            else if (c >= 'A' && c <= 'F')
                nib = static_cast<unsigned>(c - 'A') + 10u;
            else
                throw DomainError(std::string("bad hex digit '") + c + "' in bit-vector");
            for (unsigned b = 0; b < 4; ++b) {
                std::size_t i = 4 * j + b;
                if (nib & (1u << b)) {
                    if (i >= n) throw DomainError("hex bit-vector has bits beyond its width");
                    v.set(i);
                }
            }
        }
        return v;
    }

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

} // namespace rf

#endif
