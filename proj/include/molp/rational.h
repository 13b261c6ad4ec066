// Copyright 2026 The molp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOLP_RATIONAL_H_
#define MOLP_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace molp {

using BigInt = mpz_class;

// Exact arbitrary-precision fraction, always kept in canonical form
// (positive denominator, numerator and denominator coprime).
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value);
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(int64_t numerator, int64_t denominator);

  // Accepts "a" or "a/b" in base 10. Throws ParseError on malformed text or
  // a zero denominator. Non-canonical input such as "2/4" is canonicalized.
  static Rational Parse(std::string_view text);

  // 2^exponent for any (possibly negative) exponent.
  static Rational TwoPow(int64_t exponent);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  // Exact power by repeated squaring; negative exponents invert.
  Rational Pow(int64_t exponent) const;
  Rational Reciprocal() const;
  BigInt Floor() const;
  BigInt Ceil() const;

  // Canonical text: "a" when the denominator is 1, otherwise "a/b".
  std::string ToString() const;
  // Lossy; only for diagnostics and log-scale estimates.
  double ToDouble() const { return value_.get_d(); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

const Rational& Min(const Rational& a, const Rational& b);
const Rational& Max(const Rational& a, const Rational& b);

// Number of bits needed to write |value|, i.e. ceil(log2(value+1)) for
// nonnegative integers.
int64_t BitLength(const BigInt& value);

}  // namespace molp

#endif  // MOLP_RATIONAL_H_
