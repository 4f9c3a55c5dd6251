#include "relplan/fact_set.h"

#include <algorithm>

namespace relplan {

void FactSet::resize(int num_bits) {
    num_bits_ = num_bits;
    words_.resize((num_bits + 63) / 64, 0);
}

bool FactSet::subset_of(const FactSet &other) const {
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
        if (words_[w] & ~theirs)
            return false;
    }
    return true;
}

bool FactSet::intersects(const FactSet &other) const {
    size_t n = std::min(words_.size(), other.words_.size());
    for (size_t w = 0; w < n; ++w)
        if (words_[w] & other.words_[w])
            return true;
    return false;
}

bool FactSet::none() const {
    for (uint64_t w : words_)
        if (w)
            return false;
    return true;
}

int FactSet::count() const {
    int n = 0;
    for (uint64_t w : words_)
        n += __builtin_popcountll(w);
    return n;
}

FactSet &FactSet::operator|=(const FactSet &other) {
    if (other.num_bits_ > num_bits_)
        resize(other.num_bits_);
    for (size_t w = 0; w < other.words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

FactSet &FactSet::operator-=(const FactSet &other) {
    size_t n = std::min(words_.size(), other.words_.size());
    for (size_t w = 0; w < n; ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

bool FactSet::operator==(const FactSet &other) const {
    size_t n = std::max(words_.size(), other.words_.size());
    for (size_t w = 0; w < n; ++w) {
        uint64_t a = w < words_.size() ? words_[w] : 0;
        uint64_t b = w < other.words_.size() ? other.words_[w] : 0;
        if (a != b)
            return false;
    }
    return true;
}

std::vector<int> FactSet::to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
}

size_t FactSet::hash() const {
    // FNV-1a over words; trailing zero words are skipped so equal sets of
    // different allocated sizes hash alike.
    size_t last = words_.size();
    while (last > 0 && words_[last - 1] == 0)
        --last;
    uint64_t h = 1469598103934665603ull;
    for (size_t w = 0; w < last; ++w) {
        h ^= words_[w];
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

} // namespace relplan
