#include "parse.hpp"

#include <cctype>

#include "errors.hpp"

namespace nct {

namespace {

class Cursor {
public:
  explicit Cursor(const std::string& text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) err(std::string("expected '") + c + "'");
  }

  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error, what + " at position " + std::to_string(pos_ + 1));
  }

  /// Unsigned integer literal as GMP value.
  mpz_class nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) err("expected a number");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  std::uint32_t small_nat(std::uint32_t cap, const char* what) {
    mpz_class n = nat();
    if (n > cap) err(std::string(what) + " too large");
    return static_cast<std::uint32_t>(n.get_ui());
  }

  std::size_t pos() const { return pos_; }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

// Both polynomial flavors share the expression structure; Atom supplies the
// leaf parser.
template <class Poly, class AtomFn>
Poly parse_expr(Cursor& cur, const AtomFn& atom);

template <class Poly, class AtomFn>
Poly parse_factor(Cursor& cur, const AtomFn& atom) {
  Poly p = atom(cur);
  if (cur.accept('^')) {
    std::uint32_t k = cur.small_nat(1u << 20, "exponent");
    Poly r = Poly::one();
    for (std::uint32_t c = 0; c < k; ++c) r *= p;
    return r;
  }
  return p;
}

template <class Poly, class AtomFn>
Poly parse_term(Cursor& cur, const AtomFn& atom) {
  Poly p = parse_factor<Poly>(cur, atom);
  while (cur.accept('*')) p *= parse_factor<Poly>(cur, atom);
  return p;
}

template <class Poly, class AtomFn>
Poly parse_expr(Cursor& cur, const AtomFn& atom) {
  bool neg = false;
  if (cur.accept('-')) neg = true;
  else cur.accept('+');
  Poly p = parse_term<Poly>(cur, atom);
  if (neg) p = -p;
  for (;;) {
    if (cur.accept('+')) p += parse_term<Poly>(cur, atom);
    else if (cur.accept('-')) p -= parse_term<Poly>(cur, atom);
    else return p;
  }
}

Scalar parse_rational(Cursor& cur) {
  mpz_class num = cur.nat();
  if (cur.accept('/')) {
    mpz_class den = cur.nat();
    if (den == 0) cur.err("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  return Scalar(mpq_class(num));
}

NcPoly poly_atom(Cursor& cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return NcPoly::constant(parse_rational(cur));
  if (c == 'i') {
    cur.expect('i');
    return NcPoly::constant(Scalar::i());
  }
  if (c == 'x') {
    cur.expect('x');
    std::uint32_t index = cur.small_nat(1u << 20, "variable index");
    if (index == 0) cur.err("variable indices are 1-based");
    bool star = cur.accept('\'');
    return NcPoly::variable(index, star);
  }
  if (c == '[') {
    cur.expect('[');
    NcPoly f = parse_expr<NcPoly>(cur, poly_atom);
    cur.expect(',');
    NcPoly g = parse_expr<NcPoly>(cur, poly_atom);
    cur.expect(']');
    return commutator(f, g);
  }
  if (c == '(') {
    cur.expect('(');
    NcPoly f = parse_expr<NcPoly>(cur, poly_atom);
    cur.expect(')');
    return f;
  }
  cur.err("expected a rational, 'i', a variable, '[', or '('");
}

CPoly cpoly_atom(Cursor& cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return CPoly::constant(parse_rational(cur));
  if (c == 'i') {
    cur.expect('i');
    return CPoly::constant(Scalar::i());
  }
  if (c == 'z') {
    cur.expect('z');
    std::uint32_t l = cur.small_nat(1u << 20, "matrix index");
    cur.expect('_');
    // two single digits: row then column
    char r = cur.peek();
    if (!std::isdigit(static_cast<unsigned char>(r)) || r == '0') cur.err("expected row digit");
    cur.expect(r);
    char cc = cur.peek();
    if (!std::isdigit(static_cast<unsigned char>(cc)) || cc == '0') cur.err("expected column digit");
    cur.expect(cc);
    return CPoly::var(ZVar{static_cast<std::int32_t>(l), r - '0', cc - '0'});
  }
  if (c == '(') {
    cur.expect('(');
    CPoly f = parse_expr<CPoly>(cur, cpoly_atom);
    cur.expect(')');
    return f;
  }
  cur.err("expected a rational, 'i', an entry variable, or '('");
}

} // namespace

NcPoly parse_poly(const std::string& text) {
  Cursor cur(text);
  NcPoly p = parse_expr<NcPoly>(cur, poly_atom);
  if (!cur.eof()) cur.err("unexpected trailing input");
  return p;
}

CPoly parse_cpoly(const std::string& text) {
  Cursor cur(text);
  CPoly p = parse_expr<CPoly>(cur, cpoly_atom);
  if (!cur.eof()) cur.err("unexpected trailing input");
  return p;
}

namespace {

Scalar parse_entry(Cursor& cur) {
  NcPoly p = parse_expr<NcPoly>(cur, poly_atom);
  if (p.is_zero()) return Scalar::zero();
  if (p.term_count() != 1 || !p.terms().begin()->first.empty())
    cur.err("matrix entries must be constants");
  return p.terms().begin()->second;
}

Mat<Scalar> parse_matrix_body(Cursor& cur) {
  cur.expect('[');
  std::vector<std::vector<Scalar>> rows;
  do {
    cur.expect('[');
    std::vector<Scalar> row;
    do {
      row.push_back(parse_entry(cur));
    } while (cur.accept(','));
    cur.expect(']');
    rows.push_back(std::move(row));
  } while (cur.accept(','));
  cur.expect(']');
  std::size_t d = rows.size();
  for (const auto& row : rows)
    if (row.size() != d) cur.err("matrix must be square");
  Mat<Scalar> m(static_cast<int>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

} // namespace

Mat<Scalar> parse_matrix(const std::string& text) {
  Cursor cur(text);
  Mat<Scalar> m = parse_matrix_body(cur);
  if (!cur.eof()) cur.err("unexpected trailing input");
  return m;
}

std::vector<Mat<Scalar>> parse_matrix_list(const std::string& text) {
  Cursor cur(text);
  std::vector<Mat<Scalar>> mats;
  do {
    mats.push_back(parse_matrix_body(cur));
  } while (cur.accept(';'));
  if (!cur.eof()) cur.err("unexpected trailing input");
  for (const auto& m : mats)
    if (m.dim() != mats[0].dim()) cur.err("matrices differ in dimension");
  return mats;
}

} // namespace nct
