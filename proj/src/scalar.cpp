#include "scalar.hpp"

#include "errors.hpp"

namespace nct {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(errc::invalid_argument, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s;
  s.re_ = re;
  s.im_ = im;
  s.field_ = Field::QI;
  return s;
}

Scalar Scalar::conj() const {
  if (field_ == Field::Q) return *this;
  Scalar s = *this;
  s.im_ = -im_;
  return s;
}

Scalar Scalar::as_gaussian() const {
  Scalar s = *this;
  s.field_ = Field::QI;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.re_ = -re_;
  s.im_ = -im_;
  return s;
}

void Scalar::join(const Scalar& o) {
  if (o.field_ == Field::QI) field_ = Field::QI;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  join(o);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  join(o);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  join(o);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) fail(errc::invalid_argument, "division by zero");
  // multiply by the conjugate and divide by the norm |o|^2, exactly
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = re;
  im_ = im;
  join(o);
  return *this;
}

namespace {

// magnitude part of an imaginary term: "i", "2*i", "1/2*i"
std::string imag_unit(const mpq_class& m) {
  if (m == 1) return "i";
  return m.get_str() + "*i";
}

} // namespace

std::string Scalar::str() const {
  if (im_ == 0) return re_.get_str();
  std::string imag = (im_ < 0) ? "-" + imag_unit(mpq_class(-im_)) : imag_unit(im_);
  if (re_ == 0) return imag;
  if (im_ < 0) return re_.get_str() + "-" + imag_unit(mpq_class(-im_));
  return re_.get_str() + "+" + imag_unit(im_);
}

} // namespace nct
