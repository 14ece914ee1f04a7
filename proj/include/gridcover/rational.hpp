#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gridcover {

using Int = std::int64_t;
using Int128 = __int128;

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

inline Int checked_cast(Int128 v) {
  if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN))
    throw OverflowError("64-bit integer overflow");
  return static_cast<Int>(v);
}

inline Int checked_add(Int a, Int b) { return checked_cast(Int128(a) + b); }
inline Int checked_sub(Int a, Int b) { return checked_cast(Int128(a) - b); }
inline Int checked_mul(Int a, Int b) { return checked_cast(Int128(a) * b); }

// Division rounding toward negative infinity.
inline Int floor_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::string to_string_i128(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

// Reduced rational over checked 64-bit integers: den > 0, gcd(num, den) = 1.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}
  Rat(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = checked_cast(-Int128(num));
      den = checked_cast(-Int128(den));
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_cast(Int128(a.num) * b.den + Int128(b.num) * a.den),
               checked_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_cast(Int128(a.num) * b.den - Int128(b.num) * a.den),
               checked_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
  }
  Rat operator-() const { return Rat(checked_cast(-Int128(num)), den); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return Int128(a.num) * b.den < Int128(b.num) * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  bool is_integer() const { return den == 1; }

  double to_double() const { return double(num) / double(den); }

  // "p" for integers, "p/q" otherwise; the canonical text form used in JSON.
  std::string str() const {
    std::string s = std::to_string(num);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
};

inline Rat sqr(const Rat& a) { return a * a; }

// Exact square root of a non-negative rational if it exists.
inline bool rational_sqrt(const Rat& a, Rat& out) {
  if (a.num < 0) return false;
  auto isqrt = [](Int v) -> Int {
    if (v < 0) return -1;
    Int r = Int(std::sqrt(double(v)));
    while (r > 0 && Int128(r) * r > v) --r;
    while (Int128(r + 1) * (r + 1) <= v) ++r;
    return r;
  };
  Int rn = isqrt(a.num), rd = isqrt(a.den);
  if (rn * rn != a.num || rd * rd != a.den) return false;
  out = Rat(rn, rd);
  return true;
}

}  // namespace gridcover
