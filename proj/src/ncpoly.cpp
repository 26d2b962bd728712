#include "ncpoly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace nct {

NcPoly NcPoly::constant(const Scalar& c) {
  NcPoly p;
  p.add_term(Word{}, c);
  return p;
}

NcPoly NcPoly::variable(std::uint32_t index, bool star) {
  if (index == 0) fail(errc::invalid_argument, "variable indices are 1-based");
  NcPoly p;
  p.add_term(Word{Letter{index, star}}, Scalar::one());
  return p;
}

NcPoly NcPoly::monomial(const Word& w, const Scalar& c) {
  NcPoly p;
  p.add_term(w, c);
  return p;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      t_.erase(it);
      refresh_star_flag();
      return;
    }
  }
  if (word_has_star(w)) has_star_ = true;
}

void NcPoly::refresh_star_flag() {
  has_star_ = false;
  for (const auto& [w, c] : t_)
    if (word_has_star(w)) {
      has_star_ = true;
      return;
    }
}

std::uint32_t NcPoly::max_var_index() const {
  std::uint32_t n = 0;
  for (const auto& [w, c] : t_)
    for (const Letter& l : w) n = std::max(n, l.index);
  return n;
}

int NcPoly::degree() const {
  if (t_.empty()) return -1;
  // ascending (length, lex) order: the last word is longest
  return static_cast<int>(t_.rbegin()->first.size());
}

NcPoly NcPoly::operator-() const {
  NcPoly p;
  for (const auto& [w, c] : t_) p.t_.emplace(w, -c);
  p.has_star_ = has_star_;
  return p;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r;
  for (const auto& [wa, ca] : t_)
    for (const auto& [wb, cb] : o.t_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : t_) r.t_.emplace(w, k * c);
  r.has_star_ = has_star_;
  return r;
}

NcPoly NcPoly::pow(std::uint32_t k) const {
  NcPoly r = one();
  for (std::uint32_t c = 0; c < k; ++c) r *= *this;
  return r;
}

NcPoly NcPoly::star() const {
  NcPoly r;
  for (const auto& [w, c] : t_) r.add_term(word_star(w), c.conj());
  return r;
}

NcPoly NcPoly::sym_part() const {
  NcPoly r = *this + star();
  return r.scaled(Scalar::rational(1, 2));
}

NcPoly NcPoly::skew_part() const {
  NcPoly r = *this - star();
  return r.scaled(Scalar::rational(1, 2));
}

int NcPoly::word_degree_in(const Word& w, std::uint32_t index) {
  int d = 0;
  for (const Letter& l : w)
    if (l.index == index) ++d;
  return d;
}

int NcPoly::degree_in(std::uint32_t index) const {
  int d = 0;
  for (const auto& [w, c] : t_) d = std::max(d, word_degree_in(w, index));
  return d;
}

bool NcPoly::is_homogeneous_in(std::uint32_t index) const {
  if (t_.empty()) return true;
  int d = word_degree_in(t_.begin()->first, index);
  for (const auto& [w, c] : t_)
    if (word_degree_in(w, index) != d) return false;
  return true;
}

bool NcPoly::is_linear_in(std::uint32_t index) const {
  if (t_.empty()) return false;
  for (const auto& [w, c] : t_)
    if (word_degree_in(w, index) != 1) return false;
  return true;
}

std::vector<NcPoly> NcPoly::multihomogeneous_components() const {
  // degree vector as sorted (index, count) pairs
  std::map<std::vector<std::pair<std::uint32_t, int>>, NcPoly> groups;
  for (const auto& [w, c] : t_) {
    std::map<std::uint32_t, int> deg;
    for (const Letter& l : w) ++deg[l.index];
    std::vector<std::pair<std::uint32_t, int>> key(deg.begin(), deg.end());
    groups[key].add_term(w, c);
  }
  std::vector<NcPoly> out;
  out.reserve(groups.size());
  for (auto& [key, p] : groups) out.push_back(std::move(p));
  return out;
}

NcPoly NcPoly::substitute(std::uint32_t index, const NcPoly& h) const {
  NcPoly hstar = h.star();
  NcPoly r;
  for (const auto& [w, c] : t_) {
    NcPoly prod = constant(c);
    for (const Letter& l : w) {
      if (l.index == index) {
        prod *= l.star ? hstar : h;
      } else {
        prod *= variable(l.index, l.star);
      }
    }
    r += prod;
  }
  return r;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t run = k + 1;
    while (run < w.size() && w[run] == w[k]) ++run;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(w[k].index);
    if (w[k].star) s += "'";
    if (run - k > 1) s += "^" + std::to_string(run - k);
    k = run;
  }
  return s;
}

namespace {

std::string term_str(const Word& w, const Scalar& c) {
  if (w.empty()) {
    std::string cs = c.str();
    if (!c.is_rational() && c.re() != 0) return "(" + cs + ")";
    return cs;
  }
  std::string ws = word_str(w);
  if (c.is_one()) return ws;
  if (c == Scalar(-1)) return "-" + ws;
  std::string cs = c.str();
  if (!c.is_rational() && c.re() != 0) cs = "(" + cs + ")";
  return cs + "*" + ws;
}

} // namespace

std::string NcPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : t_) {
    std::string t = term_str(w, c);
    if (out.empty()) {
      out = t;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

NcPoly commutator(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

} // namespace nct
