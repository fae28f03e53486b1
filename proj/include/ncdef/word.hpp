#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncdef {

// Monomial of the free algebra on n generators: a sequence of generator
// indices. Canonical order is graded lexicographic with x_0 < x_1 < ... .
using Word = std::vector<std::uint8_t>;

inline bool gradlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct GradLex {
    bool operator()(const Word& a, const Word& b) const { return gradlex_less(a, b); }
};

// Flat index of a degree-d word in the lex enumeration of all n^d words.
inline std::size_t word_index(const Word& w, std::size_t n) {
    std::size_t idx = 0;
    for (auto l : w) {
        if (l >= n) throw std::out_of_range("word_index: letter out of range");
        idx = idx * n + l;
    }
    return idx;
}

inline Word word_from_index(std::size_t idx, std::size_t n, std::size_t degree) {
    Word w(degree);
    for (std::size_t i = degree; i-- > 0;) {
        w[i] = static_cast<std::uint8_t>(idx % n);
        idx /= n;
    }
    return w;
}

inline std::size_t pow_sz(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

inline Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += "x" + std::to_string(w[i]);
    }
    return s;
}

}  // namespace ncdef
