#pragma once

#include "wsscodes/quadratic.hpp"

namespace wss {

/// Element c0 + c1*w of F_{p^2} = F_p[w]/(reduction), reduction irreducible.
class Fp2Element {
 public:
  Fp2Element(const Residue& c0, const Residue& c1, const MonicQuadratic& reduction);
  /// c0 + c1*w in the canonical field F_p[w]/(w^2 - r), r the least non-residue.
  static Fp2Element canonical(u64 c0, u64 c1, u64 p);
  static MonicQuadratic canonical_reduction(u64 p);

  u64 p() const { return ring_.modulus(); }
  Residue c0() const { return {value_.c0, p()}; }
  Residue c1() const { return {value_.c1, p()}; }
  const MonicQuadratic& reduction() const { return ring_.modulus_poly(); }
  bool in_base_field() const { return value_.c1 == 0; }
  bool is_zero() const { return value_.c0 == 0 && value_.c1 == 0; }

  Fp2Element operator+(const Fp2Element& o) const;
  Fp2Element operator-(const Fp2Element& o) const;
  Fp2Element operator*(const Fp2Element& o) const;
  Fp2Element pow(u128 e) const { return with(ring_.pow(value_, e)); }
  Fp2Element inverse() const;
  /// x -> x^p
  Fp2Element frobenius() const { return with(ring_.conj(value_)); }
  /// x + x^p, in F_p
  Residue trace() const;
  /// x * x^p, in F_p
  Residue norm() const { return {ring_.norm(value_), p()}; }

  friend bool operator==(const Fp2Element& a, const Fp2Element& b) {
    return a.value_ == b.value_ && a.reduction() == b.reduction();
  }

 private:
  Fp2Element(QElem v, const QuadRing& ring) : value_(v), ring_(ring) {}
  Fp2Element with(QElem v) const { return {v, ring_}; }
  void check_same(const Fp2Element& o) const;

  QElem value_;
  QuadRing ring_;
};

/// Least e > 0 with x^e = 1; divides p^2 - 1.
u64 fp2_order(const Fp2Element& x);

}  // namespace wss
