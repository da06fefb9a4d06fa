// Copyright 2026 The gameaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMEAUDIT_RATIONAL_HPP
#define GAMEAUDIT_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gameaudit/detail/text.hpp"

namespace gameaudit {

// Exact rational arithmetic on 64-bit numerator/denominator, canonical form
// (reduced, denominator positive). Intermediates run in 128 bits and the
// result must fit back into 64, otherwise std::overflow_error is thrown;
// equality and ordering are therefore exact, never approximate.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    normalize(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts "3", "-2/5" and plain decimals like "0.25".
  static std::optional<Rational> parse(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) return std::nullopt;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto n = detail::parse_int(text.substr(0, slash));
      auto d = detail::parse_int(text.substr(slash + 1));
      if (!n || !d || *d == 0) return std::nullopt;
      return Rational(*n, *d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      auto whole_part = text.substr(0, dot);
      auto frac_part = text.substr(dot + 1);
      if (frac_part.empty() || frac_part.size() > 18) return std::nullopt;
      for (char ch : frac_part)
        if (ch < '0' || ch > '9') return std::nullopt;
      const bool negative = !whole_part.empty() && whole_part.front() == '-';
      auto whole = whole_part.empty() || whole_part == "-" ? std::optional<long long>(0)
                                                          : detail::parse_int(whole_part);
      auto frac = detail::parse_int(frac_part);
      if (!whole || !frac) return std::nullopt;
      __int128 den = 1;
      for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
      __int128 num = static_cast<__int128>(*whole) * den;
      num += negative || *whole < 0 ? -static_cast<__int128>(*frac) : static_cast<__int128>(*frac);
      return from128(num, den);
    }
    auto n = detail::parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }

 private:
  static Rational from128(__int128 num, __int128 den) {
    Rational r;
    r.normalize(num, den);
    return r;
  }

  void normalize(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      num /= a;
      den /= a;
    } else {
      den = 1;  // canonical zero
    }
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("rational does not fit in 64 bits after reduction");
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace gameaudit

#endif  // GAMEAUDIT_RATIONAL_HPP
