#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace latsum {

/// Exact rational on 64-bit integers with overflow-checked arithmetic.
/// Coefficient formulas here involve factorial ratios that cancel exactly;
/// keeping them rational until final assembly avoids the digit loss a
/// float-first evaluation shows by order n ~ 20.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  [[nodiscard]] long long num() const { return num_; }
  [[nodiscard]] long long den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.den_, b.den_);
    long long bd = b.den_ / g;
    // a.num*(b.den/g) + b.num*(a.den/g), over a.den*(b.den/g)
    long long lhs = checked_mul(a.num_, bd);
    long long rhs = checked_mul(b.num_, a.den_ / g);
    return Rational(checked_add(lhs, rhs), checked_mul(a.den_, bd));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(std::abs(a.num_), b.den_);
    long long g2 = std::gcd(std::abs(b.num_), a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// n! as a Rational; throws on 64-bit overflow (n > 20).
  static Rational factorial(int n) {
    if (n < 0) throw std::domain_error("Rational::factorial: negative argument");
    long long f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return Rational(f);
  }

  static Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    long long b = 1;
    for (int i = 0; i < k; ++i) {
      b = checked_mul(b, n - i);
      b /= (i + 1);  // exact at every step
    }
    return Rational(b);
  }

 private:
  long long num_ = 0;
  long long den_ = 1;

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: 64-bit overflow");
    return r;
  }
  static long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: 64-bit overflow");
    return r;
  }
};

}  // namespace latsum
