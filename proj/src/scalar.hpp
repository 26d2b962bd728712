#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nct {

/// Coefficient field: the rationals, or the Gaussian rationals Q(i).
enum class Field : std::uint8_t { Q, QI };

/// Exact scalar: a rational, or a Gaussian rational re + im*i when the field
/// tag is QI. Fractions are always kept reduced with a positive denominator.
/// Arithmetic joins the field tags (Q op QI gives QI); a nonzero imaginary
/// part forces the QI tag.
class Scalar {
public:
  Scalar() : re_(0), im_(0), field_(Field::Q) {}
  Scalar(long n) : re_(n), im_(0), field_(Field::Q) {}
  Scalar(const mpq_class& re) : re_(re), im_(0), field_(Field::Q) {}

  static Scalar rational(long num, long den);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  /// The imaginary unit i.
  static Scalar i() { return gaussian(0, 1); }
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  Field field() const { return field_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  /// True when the imaginary part vanishes (the value lies in Q).
  bool is_rational() const { return im_ == 0; }

  /// Complex conjugate; fixes Q pointwise, negates the imaginary part on QI.
  Scalar conj() const;
  /// Same value with the field tag promoted to QI.
  Scalar as_gaussian() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Exact division; rejects a zero divisor.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: "p/q", or with an imaginary part "p/q+r/s*i" (the unit
  /// coefficient is elided: "i", "2-i", "3*i").
  std::string str() const;

private:
  mpq_class re_;
  mpq_class im_;
  Field field_;

  void join(const Scalar& o);
};

} // namespace nct
