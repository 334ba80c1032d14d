#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercube {

// Exponents of one monomial, one byte per variable. Slots past the ring arity
// stay zero so that whole-array comparison and hashing are arity-agnostic.
class ExponentVector {
public:
    static constexpr std::size_t kCapacity = 32;

    ExponentVector() = default;
    ExponentVector(std::initializer_list<int> entries) {
        if (entries.size() > kCapacity) throw std::length_error("exponent vector too long");
        std::size_t i = 0;
        for (int v : entries) set(i++, v);
    }
    template <class Int>
    static ExponentVector from(std::span<const Int> entries) {
        if (entries.size() > kCapacity) throw std::length_error("exponent vector too long");
        ExponentVector e;
        for (std::size_t i = 0; i < entries.size(); ++i) e.set(i, static_cast<int>(entries[i]));
        return e;
    }
    template <class Int>
    static ExponentVector from(const std::vector<Int>& entries) {
        return from(std::span<const Int>(entries));
    }

    std::uint8_t operator[](std::size_t i) const { return bytes_[i]; }
    void set(std::size_t i, int v) {
        if (v < 0 || v > 255) throw std::out_of_range("exponent entry out of range");
        bytes_[i] = static_cast<std::uint8_t>(v);
    }
    std::uint8_t* data() { return bytes_.data(); }
    const std::uint8_t* data() const { return bytes_.data(); }

    std::uint64_t word(int k) const {
        std::uint64_t w;
        std::memcpy(&w, bytes_.data() + 8 * k, 8);
        return w;
    }
    void set_word(int k, std::uint64_t w) { std::memcpy(bytes_.data() + 8 * k, &w, 8); }

    // Caller guarantees no entry exceeds 255.
    ExponentVector operator+(const ExponentVector& o) const {
        ExponentVector r;
        for (int k = 0; k < 4; ++k) r.set_word(k, word(k) + o.word(k));
        return r;
    }
    bool divides(const ExponentVector& o) const {
        for (std::size_t i = 0; i < kCapacity; ++i)
            if (bytes_[i] > o.bytes_[i]) return false;
        return true;
    }
    ExponentVector operator-(const ExponentVector& o) const {
        ExponentVector r;
        for (std::size_t i = 0; i < kCapacity; ++i) r.bytes_[i] = static_cast<std::uint8_t>(bytes_[i] - o.bytes_[i]);
        return r;
    }

    int total_degree() const {
        int s = 0;
        for (auto b : bytes_) s += b;
        return s;
    }

    std::uint64_t hash() const {
        std::uint64_t h = word(0) * 0x9E3779B97F4A7C15ULL;
        h ^= std::rotl(word(1) * 0xC2B2AE3D27D4EB4FULL, 17);
        h ^= std::rotl(word(2) * 0x165667B19E3779F9ULL, 31);
        h ^= std::rotl(word(3) * 0xD6E8FEB86659FD93ULL, 47);
        h ^= h >> 29;
        h *= 0xBF58476D1CE4E5B9ULL;
        h ^= h >> 32;
        return h;
    }

    std::vector<int> to_vector(std::size_t arity) const { return {bytes_.begin(), bytes_.begin() + arity}; }
    std::string to_string(std::size_t arity, char sep = ' ') const {
        std::string s;
        for (std::size_t i = 0; i < arity; ++i) {
            if (i) s.push_back(sep);
            s += std::to_string(bytes_[i]);
        }
        return s;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return std::memcmp(a.bytes_.data(), b.bytes_.data(), kCapacity) == 0;
    }
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
        int c = std::memcmp(a.bytes_.data(), b.bytes_.data(), kCapacity);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    alignas(8) std::array<std::uint8_t, kCapacity> bytes_{};
};

struct ExponentHash {
    std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

}  // namespace hypercube
