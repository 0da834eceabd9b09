/**
 * Words over indexed generators with formal inverses.
 *
 * A letter is a nonzero int: +(i+1) is generator i, -(i+1) its inverse.
 * Words compose left-to-right and are kept freely reduced.
 */

#ifndef CGT_WORD_HPP
#define CGT_WORD_HPP

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace cgt {

using Letter = int;
using Word = std::vector<Letter>;

inline Letter letter(std::size_t gen, bool inverse = false) {
    int l = static_cast<int>(gen) + 1;
    return inverse ? -l : l;
}

inline std::size_t letter_gen(Letter l) { return static_cast<std::size_t>(std::abs(l)) - 1; }
inline bool letter_inverted(Letter l) { return l < 0; }

/// Free reduction: cancel adjacent x x^-1 pairs.
inline Word reduce(const Word& w) {
    Word out;
    for (Letter l : w) {
        if (l == 0) throw std::invalid_argument("word: zero letter");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce(out);
}

/// Exponent-sum vector of a word over `gen_count` generators.
template <typename IntT>
std::vector<IntT> exponent_vector(const Word& w, std::size_t gen_count) {
    std::vector<IntT> v(gen_count, IntT(0));
    for (Letter l : w) {
        std::size_t g = letter_gen(l);
        if (g >= gen_count) throw std::out_of_range("word: generator out of range");
        v[g] += letter_inverted(l) ? -1 : 1;
    }
    return v;
}

}  // namespace cgt

#endif
