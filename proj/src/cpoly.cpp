#include "cpoly.hpp"

#include <limits>

#include "errors.hpp"

namespace nct {

std::string zvar_name(const ZVar& v) {
  return "z" + std::to_string(v.l) + "_" + std::to_string(v.i) + std::to_string(v.j);
}

namespace {

long total_degree(const Mono& m) {
  long d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

} // namespace

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // lex on the exponent vectors: at the first variable where they differ, the
  // monomial with the larger exponent is lex-greater
  std::size_t ka = 0, kb = 0;
  while (ka < a.size() && kb < b.size()) {
    const auto& [va, ea] = a[ka];
    const auto& [vb, eb] = b[kb];
    if (va == vb) {
      if (ea != eb) return ea < eb;
      ++ka;
      ++kb;
    } else if (va < vb) {
      return false; // a has a positive exponent on an earlier variable: a is greater
    } else {
      return true;
    }
  }
  // equal total degree: one list exhausts exactly when the other does
  return false;
}

CPoly CPoly::constant(const Scalar& c) {
  CPoly p;
  if (!c.is_zero()) p.t_.emplace(Mono{}, c);
  return p;
}

CPoly CPoly::var(const ZVar& v) {
  if (v.l < 1 || v.i < 1 || v.j < 1 || v.i > 9 || v.j > 9)
    fail(errc::invalid_argument, "generic-entry variable out of range: indices are 1-based, i,j <= 9");
  CPoly p;
  p.t_.emplace(Mono{{v, 1}}, Scalar::one());
  return p;
}

bool CPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Scalar CPoly::constant_value() const {
  auto it = t_.find(Mono{});
  return it == t_.end() ? Scalar::zero() : it->second;
}

int CPoly::degree() const {
  if (t_.empty()) return -1;
  // ascending graded order: the last term has maximal total degree
  return static_cast<int>(total_degree(t_.rbegin()->first));
}

void CPoly::add_term(const Mono& m, const Scalar& c) {
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  } else if (c.is_zero()) {
    t_.erase(it);
  }
}

CPoly CPoly::operator-() const {
  CPoly p;
  for (const auto& [m, c] : t_) p.t_.emplace(m, -c);
  return p;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

namespace {

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.reserve(a.size() + b.size());
  std::size_t ka = 0, kb = 0;
  while (ka < a.size() || kb < b.size()) {
    if (kb == b.size() || (ka < a.size() && a[ka].first < b[kb].first)) {
      r.push_back(a[ka++]);
    } else if (ka == a.size() || b[kb].first < a[ka].first) {
      r.push_back(b[kb++]);
    } else {
      Exp e = a[ka].second + b[kb].second;
      if (e < a[ka].second) fail(errc::limit_exceeded, "monomial exponent overflow");
      r.emplace_back(a[ka].first, e);
      ++ka;
      ++kb;
    }
  }
  return r;
}

} // namespace

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly r;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

CPoly CPoly::scaled(const Scalar& c) const {
  CPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
  return r;
}

CPoly CPoly::conj() const {
  CPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c.conj());
  return r;
}

Scalar CPoly::eval(const std::map<ZVar, Scalar>& point) const {
  Scalar total = Scalar::zero();
  for (const auto& [m, c] : t_) {
    Scalar v = c;
    for (const auto& [var, e] : m) {
      auto it = point.find(var);
      if (it == point.end()) fail(errc::unassigned_variable, "unassigned variable " + zvar_name(var));
      // exact power by repeated squaring
      Scalar base = it->second;
      Exp k = e;
      Scalar pw = Scalar::one();
      while (k > 0) {
        if (k & 1u) pw *= base;
        base *= base;
        k >>= 1u;
      }
      v *= pw;
    }
    total += v;
  }
  return total;
}

namespace {

std::string mono_str(const Mono& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += zvar_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Renders one term; a leading '-' is extracted by the caller for joining.
std::string term_str(const Mono& m, const Scalar& c) {
  std::string mono = mono_str(m);
  if (mono.empty()) {
    std::string cs = c.str();
    if (!c.is_rational() && c.re() != 0) return "(" + cs + ")";
    return cs;
  }
  if (c.is_one()) return mono;
  if (c == Scalar(-1)) return "-" + mono;
  std::string cs = c.str();
  if (!c.is_rational() && c.re() != 0) cs = "(" + cs + ")";
  return cs + "*" + mono;
}

} // namespace

std::string CPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    std::string t = term_str(m, c);
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

} // namespace nct
