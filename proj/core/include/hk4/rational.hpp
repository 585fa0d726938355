#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hk4 {

// Exact rational over int64 with __int128 intermediates. Every predicate in
// this library is an exact integer comparison; Rat carries thresholds such as
// (1+3t)/4 + mu around without rounding. Overflow of a reduced result throws
// instead of degrading silently.
class Rat {
 public:
  constexpr Rat() = default;

  Rat(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = num;
    den_ = den;
  }

  static Rat of(long long v) { return Rat(v, 1); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rat operator+(const Rat& o) const {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    return reduce(n, d);
  }
  Rat operator-(const Rat& o) const {
    __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    return reduce(n, d);
  }
  Rat operator*(const Rat& o) const {
    return reduce((__int128)num_ * o.num_, (__int128)den_ * o.den_);
  }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rat: division by zero");
    return reduce((__int128)num_ * o.den_, (__int128)den_ * o.num_);
  }
  Rat operator-() const { return Rat(-num_, den_); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double approx() const { return (double)num_ / (double)den_; }

  // Parses "a/b" or "a" (optionally signed, also accepts plain decimals like
  // "0.05" by scaling to a power of ten).
  static Rat parse(const std::string& s);

  // Least integer k with k/den >= *this, i.e. ceil(this * den).
  long long ceil_scaled(long long den) const {
    __int128 n = (__int128)num_ * den;
    __int128 q = n / den_;
    if (n % den_ != 0 && n > 0) q += 1;
    return checked_ll(q, "Rat::ceil_scaled");
  }
  // Greatest integer k with k/den <= *this.
  long long floor_scaled(long long den) const {
    __int128 n = (__int128)num_ * den;
    __int128 q = n / den_;
    if (n % den_ != 0 && n < 0) q -= 1;
    return checked_ll(q, "Rat::floor_scaled");
  }

 private:
  static long long checked_ll(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error(std::string(what) + ": out of int64 range");
    return (long long)v;
  }
  static Rat reduce(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rat r;
    r.num_ = checked_ll(n, "Rat arithmetic");
    r.den_ = checked_ll(d, "Rat arithmetic");
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long a = std::stoll(s.substr(0, slash));
    long long b = std::stoll(s.substr(slash + 1));
    return Rat(a, b);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long long scale = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
    return Rat(std::stoll(digits), scale);
  }
  return Rat(std::stoll(s), 1);
}

}  // namespace hk4
