#pragma once

#include <string>
#include <vector>

#include "wsscodes/modnum.hpp"
#include "wsscodes/quadratic.hpp"

namespace wss {

/// Dense polynomial over Z_m, coefficients from degree 0 upward.
/// Only what exact division checks need; no attempt at fast multiplication.
class ZmPoly {
 public:
  ZmPoly(std::vector<u64> coeffs, u64 modulus);
  static ZmPoly from(const MonicQuadratic& f);
  /// x^n - 1
  static ZmPoly x_pow_minus_one(u64 n, u64 modulus);

  u64 modulus() const { return m_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<u64>& coeffs() const { return c_; }

  ZmPoly operator+(const ZmPoly& o) const;
  ZmPoly operator-(const ZmPoly& o) const;
  ZmPoly operator*(const ZmPoly& o) const;

  struct DivMod;
  /// Long division by a monic divisor.
  DivMod divmod(const ZmPoly& monic_divisor) const;

  /// e.g. "3x+6"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const ZmPoly&, const ZmPoly&) = default;

 private:
  void trim();
  std::vector<u64> c_;
  u64 m_;
};

struct ZmPoly::DivMod {
  ZmPoly quotient;
  ZmPoly remainder;
};

}  // namespace wss
