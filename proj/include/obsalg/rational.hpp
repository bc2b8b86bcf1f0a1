/*
 * Copyright 2026 The obsalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OBSALG_RATIONAL_HPP
#define OBSALG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obsalg {

/**
 * Exact rational number p/q with 64-bit numerator and denominator.
 *
 * Always kept in lowest terms with a positive denominator, so structural
 * equality is numeric equality. Every operation computes in 128 bits and
 * throws std::overflow_error if the reduced result no longer fits.
 */
class Rational {
public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit from integers is intended

  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0)
      throw std::domain_error("rational with zero denominator");
    *this = reduce(n, d);
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer <= *this.
  std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
      --q;
    return q;
  }

  std::int64_t ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0)
      ++q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using W = __int128;
    return reduce(W(a.num_) * b.den_ + W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using W = __int128;
    return reduce(W(a.num_) * b.den_ - W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using W = __int128;
    return reduce(W(a.num_) * b.num_, W(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0)
      throw std::domain_error("rational division by zero");
    using W = __int128;
    return reduce(W(a.num_) * b.den_, W(a.den_) * b.num_);
  }
  Rational operator-() const {
    if (num_ == INT64_MIN)
      throw std::overflow_error("rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    using W = __int128;
    W l = W(a.num_) * b.den_;
    W r = W(b.num_) * a.den_;
    if (l < r)
      return std::strong_ordering::less;
    if (l > r)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or "p" for integers.
  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p", "p/q" (whitespace not allowed). Throws std::invalid_argument.
  static Rational parse(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(s) + "'"); };
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    auto parse_int = [&](std::string_view t, bool allow_sign) -> std::int64_t {
      if (t.empty())
        throw bad();
      bool neg = false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        i = 1;
      }
      if (i == t.size())
        throw bad();
      __int128 v = 0;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9')
          throw bad();
        v = v * 10 + (t[i] - '0');
        if (v > __int128(INT64_MAX) + 1)
          throw std::overflow_error("rational literal out of range: " + std::string(s));
      }
      if (neg)
        v = -v;
      if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational literal out of range: " + std::string(s));
      return static_cast<std::int64_t>(v);
    };
    std::int64_t n = parse_int(ns, true);
    if (slash == std::string_view::npos)
      return Rational(n);
    std::int64_t d = parse_int(ds, false);
    if (d == 0)
      throw bad();
    return Rational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static Rational reduce(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace obsalg

template <>
struct std::hash<obsalg::Rational> {
  std::size_t operator()(const obsalg::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};

#endif  // OBSALG_RATIONAL_HPP
