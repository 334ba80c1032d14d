#pragma once

#include "hypercube/exponent.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace hypercube {

// Open-addressing accumulator keyed by exponent vectors. A slot is empty when
// its first key word is all ones, which no exponent of total degree < 2040 hits.
template <class Value>
class TermTable {
public:
    struct Slot {
        ExponentVector key;
        Value value;
    };

    explicit TermTable(std::size_t expected = 16) { rehash(capacity_for(expected)); }

    std::size_t size() const { return size_; }
    std::size_t capacity() const { return slots_.size(); }

    Value& operator[](const ExponentVector& key) {
        if ((size_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
        std::size_t i = key.hash() & mask_;
        for (;;) {
            Slot& s = slots_[i];
            if (s.key.word(0) == kEmpty) {
                s.key = key;
                s.value = Value{};
                ++size_;
                return s.value;
            }
            if (s.key == key) return s.value;
            i = (i + 1) & mask_;
        }
    }

    void add(const ExponentVector& key, const Value& v) { (*this)[key] += v; }

    template <class F>
    void for_each(F&& f) const {
        for (const Slot& s : slots_)
            if (s.key.word(0) != kEmpty) f(s.key, s.value);
    }
    template <class F>
    void for_each_mut(F&& f) {
        for (Slot& s : slots_)
            if (s.key.word(0) != kEmpty) f(s.key, s.value);
    }

    void clear_and_release() {
        std::vector<Slot>().swap(slots_);
        size_ = 0;
        mask_ = 0;
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    static std::size_t capacity_for(std::size_t n) {
        std::size_t c = 16;
        while (c < 2 * n + 2) c <<= 1;
        return c;
    }

    void rehash(std::size_t cap) {
        std::vector<Slot> old;
        old.swap(slots_);
        slots_.resize(cap);
        for (Slot& s : slots_) s.key.set_word(0, kEmpty);
        mask_ = cap - 1;
        size_ = 0;
        for (Slot& s : old) {
            if (s.key.word(0) == kEmpty) continue;
            std::size_t i = s.key.hash() & mask_;
            while (slots_[i].key.word(0) != kEmpty) i = (i + 1) & mask_;
            slots_[i].key = s.key;
            slots_[i].value = std::move(s.value);
            ++size_;
        }
    }

    std::vector<Slot> slots_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
};

}  // namespace hypercube
