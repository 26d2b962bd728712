#include "word.hpp"

#include <algorithm>

namespace nct {

std::size_t least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  auto at = [&](std::size_t k) -> const Letter& { return w[k % n]; };
  // invariant: neither candidate in (min(i,j), i) ∪ (min(i,j), j) can start
  // the least rotation; k counts the agreed prefix of the two candidates
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter& a = at(i + k);
    const Letter& b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i = i + k + 1;
    } else {
      j = j + k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

Word cyc_normal_form(const Word& w) { return rotate_left(w, least_rotation(w)); }

Word word_star(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Letter& l : r) l.star = !l.star;
  return r;
}

bool word_has_star(const Word& w) {
  return std::any_of(w.begin(), w.end(), [](const Letter& l) { return l.star; });
}

} // namespace nct
