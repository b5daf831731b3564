#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adlv {

// Exact rational on 64-bit integers, always normalized (den > 0, gcd = 1).
// All quantities in this library are tiny (denominators bounded by small
// group orders), so no overflow guards are needed.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rat operator-() const { return Rat(-num, den); }
  Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw std::domain_error("Rat: division by zero");
    return Rat(num * o.den, den * o.num);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

  // fractional part in [0, 1)
  Rat frac() const {
    long long f = num % den;
    if (f < 0) f += den;
    return Rat(f, den);
  }

  long long to_int() const {
    if (den != 1) throw std::domain_error("Rat: not an integer: " + str());
    return num;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat abs(const Rat& r) { return r.num < 0 ? -r : r; }

struct RatHash {
  size_t operator()(const Rat& r) const {
    return std::hash<long long>()(r.num) * 1000003u ^ std::hash<long long>()(r.den);
  }
};

}  // namespace adlv
