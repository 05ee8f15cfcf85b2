#include "npb/field.hpp"

namespace npb {

namespace {
bool isPrime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
} // namespace

Field Field::prime(unsigned long p) {
  if (!isPrime(p)) fail(ErrorKind::ParseError, "field characteristic must be prime, got " + std::to_string(p));
  return Field(p);
}

Scalar Scalar::fromLong(const Field& f, long v) {
  Scalar s;
  if (f.isRational()) {
    s.p_ = 0;
    s.q_ = v;
  } else {
    s.p_ = f.p();
    long r = v % (long)f.p();
    if (r < 0) r += (long)f.p();
    s.r_ = (unsigned long)r;
  }
  return s;
}

Scalar Scalar::fromRatio(const Field& f, long num, long den) {
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
  if (f.isRational()) {
    Scalar s;
    s.p_ = 0;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  return fromLong(f, num) / fromLong(f, den);
}

Scalar Scalar::fromDecimalString(const Field& f, const std::string& str) {
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      if (f.isRational()) {
        Scalar s;
        s.q_ = mpq_class(str);
        s.q_.canonicalize();
        return s;
      }
      return fromLong(f, std::stol(str));
    }
    if (f.isRational()) {
      Scalar s;
      s.q_ = mpq_class(str);
      s.q_.canonicalize();
      return s;
    }
    return fromLong(f, std::stol(str.substr(0, slash))) / fromLong(f, std::stol(str.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError, "bad scalar literal: " + str);
  }
}

void Scalar::checkCompatible(const Scalar& o) const {
  if (p_ != o.p_) fail(ErrorKind::ShapeMismatch, "scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  checkCompatible(o);
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = (r_ + o.r_) % p_;
  else
    s.q_ = q_ + o.q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  checkCompatible(o);
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = (r_ + p_ - o.r_) % p_;
  else
    s.q_ = q_ - o.q_;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  checkCompatible(o);
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = (r_ * o.r_) % p_; // p is small; no overflow for p < 2^32 on 64-bit
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::inverse() const {
  if (isZero()) fail(ErrorKind::ShapeMismatch, "division by zero");
  Scalar s;
  s.p_ = p_;
  if (p_) {
    // Fermat: r^(p-2) mod p
    unsigned long res = 1, base = r_ % p_, e = p_ - 2;
    while (e) {
      if (e & 1) res = (res * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    s.r_ = res;
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
  checkCompatible(o);
  return p_ ? r_ < o.r_ : q_ < o.q_;
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace npb
