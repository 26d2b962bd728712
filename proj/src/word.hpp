#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace nct {

/// One letter of the free *-alphabet: the variable x{index}, possibly starred.
/// Letters order by index first, with the unstarred letter below its star.
struct Letter {
  std::uint32_t index; // 1-based
  bool star = false;
  auto operator<=>(const Letter&) const = default;
};

/// A word: a finite (possibly empty) product of letters.
using Word = std::vector<Letter>;

/// Strict weak order on words: by length, then lexicographically by letters.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Index of the lexicographically least rotation (Booth-style two-pointer
/// scan, linear time). Returns 0 for the empty word.
std::size_t least_rotation(const Word& w);

/// The word rotated left by k positions.
Word rotate_left(const Word& w, std::size_t k);

/// Lexicographically least rotation of w; the canonical representative of its
/// cyclic class.
Word cyc_normal_form(const Word& w);

/// Reversal with every star flag toggled: the image of the word under *.
Word word_star(const Word& w);

bool word_has_star(const Word& w);

} // namespace nct
