#pragma once

#include <string>
#include <vector>

#include "adlv/rational.hpp"

namespace adlv {

/// Integer-coefficient polynomial in the formal variable q, stored expanded
/// in the monomial basis.  Coefficient arithmetic is overflow-checked.
class QPoly {
 public:
  QPoly() = default;  // zero
  static QPoly constant(Int v);
  static QPoly q_power(int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) {
    a += b;
    return a;
  }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  void mul_q();            // *= q
  void mul_q_minus_one();  // *= (q - 1)

  Int eval(Int q) const;  // overflow-checked Horner
  std::string str() const;

 private:
  static Int checked_add(Int a, Int b);
  static Int checked_mul(Int a, Int b);
  void trim();
  std::vector<Int> c_;  // c_[k] = coefficient of q^k
};

}  // namespace adlv
