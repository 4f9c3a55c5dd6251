#ifndef RELPLAN_FACT_SET_H
#define RELPLAN_FACT_SET_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace relplan {

// Bitset over dense fact ids. All state and pre/effect sets are FactSets;
// set algebra on 64-bit words is what keeps applicability tests and tree
// truncation cheap.
class FactSet {
public:
    FactSet() = default;
    explicit FactSet(int num_bits) { resize(num_bits); }

    void resize(int num_bits);
    int size() const { return num_bits_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    // Out-of-range bits read as false, so a state over the original fact
    // universe can be tested against ids introduced by goal compilation.
    bool test(int i) const {
        if (i < 0 || i >= num_bits_)
            return false;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    bool subset_of(const FactSet &other) const;
    bool intersects(const FactSet &other) const;
    bool none() const;
    int count() const;

    FactSet &operator|=(const FactSet &other);
    FactSet &operator-=(const FactSet &other); // set difference
    bool operator==(const FactSet &other) const;

    // Calls fn(i) for every set bit, ascending.
    template <typename Fn> void for_each(Fn fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                fn(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const;
    size_t hash() const;
    size_t memory_bytes() const { return words_.capacity() * sizeof(uint64_t); }

private:
    int num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct FactSetHash {
    size_t operator()(const FactSet &s) const { return s.hash(); }
};

} // namespace relplan

#endif
