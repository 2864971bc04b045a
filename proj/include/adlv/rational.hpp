#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace adlv {

using Int = std::int64_t;

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// Exact rational with 64-bit numerator/denominator.  All intermediates go
/// through 128-bit arithmetic and every result is checked back into 64 bits;
/// an overflow throws instead of wrapping.  The domain values handled here
/// (pairings, barycenters, half-sums of roots) stay far below that bound.
class Rat {
 public:
  Rat() = default;
  Rat(Int n) : num_(n) {}  // NOLINT: implicit by design, mirrors integer use
  Rat(Int n, Int d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
      nn = -nn;
      dd = -dd;
    }
    assign(nn, dd);
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  Int to_int() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
    return num_;
  }
  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    i128 n = i128(a.num_) * b.den_;
    i128 d = i128(a.den_) * b.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return make(n, d);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  using i128 = __int128;

  static Int check(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("Rat overflow");
    return static_cast<Int>(v);
  }
  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Rat make(i128 n, i128 d) {
    Rat r;
    r.assign(n, d);
    return r;
  }
  void assign(i128 n, i128 d) {
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = check(n);
    den_ = check(d);
  }

  Int num_{0};
  Int den_{1};
};

}  // namespace adlv

namespace Eigen {
template <>
struct NumTraits<adlv::Rat> : GenericNumTraits<adlv::Rat> {
  typedef adlv::Rat Real;
  typedef adlv::Rat NonInteger;
  typedef adlv::Rat Nested;
  static inline Real epsilon() { return adlv::Rat(0); }
  static inline Real dummy_precision() { return adlv::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 8
  };
};
}  // namespace Eigen
