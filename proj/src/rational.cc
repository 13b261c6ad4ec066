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

#include "molp/rational.h"

#include <cctype>
#include <ostream>
#include <utility>

#include "molp/errors.h"

namespace molp {

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s, bool allow_sign) {
  std::string_view digits = s;
  bool negative = false;
  if (allow_sign && !digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (!IsDigits(digits)) {
    throw ParseError("malformed rational: '" + std::string(s) + "'");
  }
  BigInt value(std::string(digits), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InvalidParameter("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(int64_t numerator, int64_t denominator)
    : Rational(BigInt(static_cast<long>(numerator)),
               BigInt(static_cast<long>(denominator))) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, /*allow_sign=*/true));
  }
  const BigInt num = ParseInteger(text.substr(0, slash), true);
  const BigInt den = ParseInteger(text.substr(slash + 1), false);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational Rational::TwoPow(int64_t exponent) {
  BigInt p;
  const uint64_t magnitude =
      exponent < 0 ? static_cast<uint64_t>(-exponent) : exponent;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, magnitude);
  if (exponent >= 0) return Rational(p);
  return Rational(BigInt(1), p);
}

Rational Rational::Pow(int64_t exponent) const {
  if (exponent < 0) return Reciprocal().Pow(-exponent);
  mpq_class result(1);
  mpq_class base = value_;
  uint64_t e = static_cast<uint64_t>(exponent);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return Rational(std::move(result));
}

Rational Rational::Reciprocal() const {
  if (sign() == 0) throw InvalidParameter("reciprocal of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(inv));
}

BigInt Rational::Floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::Ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::ToString() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.sign() == 0) throw InvalidParameter("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

int64_t BitLength(const BigInt& value) {
  if (value == 0) return 0;
  return static_cast<int64_t>(mpz_sizeinbase(value.get_mpz_t(), 2));
}

}  // namespace molp
