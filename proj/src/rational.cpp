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

#include "monotree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace monotree {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  // The backend's two-integer constructor rejects negative denominators on
  // unbounded integer types, so move the sign to the numerator first.
  if (den < 0) {
    value_ = Backend(-num, -den);
  } else {
    value_ = Backend(num, den);
  }
}

const BigInt Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

const BigInt Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::optional<Rational> Rational::parse(const std::string& text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string int_part, frac_part;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    int_part += text[i++];
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac_part += text[i++];
    }
  }
  if (i != text.size() || (int_part.empty() && frac_part.empty())) {
    return std::nullopt;
  }
  BigInt num = int_part.empty() ? BigInt(0) : BigInt(int_part);
  BigInt den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (!is_integral()) {
    s += "/";
    s += denominator().str();
  }
  return s;
}

double Rational::to_double() const {
  return static_cast<double>(value_);
}

std::optional<Rational> checked_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) return std::nullopt;
  return Rational(Rational::Backend(a.value_ / b.value_));
}

}  // namespace monotree
