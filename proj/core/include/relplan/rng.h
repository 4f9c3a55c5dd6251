#ifndef RELPLAN_RNG_H
#define RELPLAN_RNG_H

#include <cstdint>
#include <random>

namespace relplan {

// Seedable RNG with a fully specified algorithm (std::mt19937_64, whose
// output sequence is fixed by the standard), so runs reproduce bit-for-bit
// across platforms. Draws avoid std::uniform_* distributions, whose mapping
// is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n) by rejection sampling; exact and portable.
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace relplan

#endif
