#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "npb/errors.hpp"

namespace npb {

// Exact ground field: Q or F_p with p prime. No floating point anywhere.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);

  bool isRational() const { return p_ == 0; }
  unsigned long p() const { return p_; }
  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_ = 0;
};

// A field element. Rationals are GMP-backed; F_p elements are residues in [0, p).
class Scalar {
public:
  Scalar() : p_(0), r_(0) {}

  static Scalar zero(const Field& f) { return fromLong(f, 0); }
  static Scalar one(const Field& f) { return fromLong(f, 1); }
  static Scalar fromLong(const Field& f, long v);
  static Scalar fromRatio(const Field& f, long num, long den);
  static Scalar fromDecimalString(const Field& f, const std::string& s); // "a" or "a/b"

  bool isZero() const { return p_ ? r_ == 0 : q_ == 0; }
  bool isOne() const { return p_ ? r_ == 1 : q_ == 1; }
  unsigned long p() const { return p_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // o must be nonzero
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order for deterministic output (not a field notion).
  bool operator<(const Scalar& o) const;

  std::string str() const; // canonical: "a/b" over Q (den > 0, reduced), residue over F_p

private:
  unsigned long p_;     // 0 means rationals
  unsigned long r_;     // residue when p_ > 0
  mpq_class q_;         // value when p_ == 0
  void checkCompatible(const Scalar& o) const;
};

} // namespace npb
