// Copyright 2026 The Monotree Authors.
//
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

#ifndef MONOTREE_RATIONAL_HPP_
#define MONOTREE_RATIONAL_HPP_

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monotree {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic on arbitrary-precision integers. Values are kept
// in lowest terms with a positive denominator, so equality is structural.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& num, const BigInt& den);

  const BigInt numerator() const;
  const BigInt denominator() const;
  bool is_integral() const { return denominator() == 1; }
  bool is_zero() const { return numerator() == 0; }
  bool is_negative() const { return numerator() < 0; }

  // Parses a plain decimal string such as "72", "-4.5" or "0.125".
  // Exponents and fraction syntax are rejected.
  static std::optional<Rational> parse(const std::string& text);

  // Integral values print as integers, everything else as "num/den".
  std::string to_string() const;
  double to_double() const;

  Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
  Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
  Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
  Rational operator-() const { return Rational(-value_); }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}

  Backend value_;

  friend std::optional<Rational> checked_div(const Rational&, const Rational&);
};

// Returns a/b, or nullopt when b is zero.
std::optional<Rational> checked_div(const Rational& a, const Rational& b);

}  // namespace monotree

#endif  // MONOTREE_RATIONAL_HPP_
