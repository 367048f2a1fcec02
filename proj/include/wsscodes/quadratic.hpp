#pragma once

#include <string>
#include <string_view>

#include "wsscodes/modnum.hpp"

namespace wss {

/// x^2 + a1*x + a0 over Z_m, coefficients in canonical range.
class MonicQuadratic {
 public:
  MonicQuadratic(i128 a1, i128 a0, u64 modulus);
  MonicQuadratic(const Residue& a1, const Residue& a0);

  u64 modulus() const { return m_; }
  Residue a1() const { return {a1_, m_}; }
  Residue a0() const { return {a0_, m_}; }
  u64 a1_value() const { return a1_; }
  u64 a0_value() const { return a0_; }

  /// a1^2 - 4 a0 in Z_m.
  Residue discriminant() const;
  /// A^2 - 4B over the integers, with A, B the canonical lifts.
  i128 integer_discriminant() const;

  Residue evaluate(const Residue& x) const;
  /// Coefficient-wise reduction to a divisor of the modulus.
  MonicQuadratic reduce(u64 divisor) const;

  /// "x^2+29x+19 (mod 49)"
  std::string to_string() const;
  /// Polynomial part only, "x^2+29x+19".
  std::string body() const;

  friend bool operator==(const MonicQuadratic&, const MonicQuadratic&) = default;

 private:
  u64 a1_;
  u64 a0_;
  u64 m_;
};

/// Parses "x^2+29x+19 (mod 49)", "x^2 - 2x + 1 mod 9" or, when the text has no
/// modulus clause, uses `default_modulus` (0 means the clause is mandatory). A
/// clause that contradicts a nonzero default is an error.
MonicQuadratic parse_quadratic(std::string_view text, u64 default_modulus = 0);

/// Element c0 + c1*x of Z_m[x]/(f).
struct QElem {
  u64 c0 = 0;
  u64 c1 = 0;
  friend bool operator==(const QElem&, const QElem&) = default;
};

/// Arithmetic in the quotient ring Z_m[x]/(f) for monic quadratic f.
class QuadRing {
 public:
  explicit QuadRing(const MonicQuadratic& f) : f_(f), m_(f.modulus()) {}

  const MonicQuadratic& modulus_poly() const { return f_; }
  u64 modulus() const { return m_; }

  QElem one() const { return {1 % m_, 0}; }
  QElem x() const;
  QElem scalar(u64 c) const { return {c % m_, 0}; }
  bool is_one(const QElem& a) const { return a == one(); }

  QElem add(const QElem& a, const QElem& b) const;
  QElem sub(const QElem& a, const QElem& b) const;
  QElem mul(const QElem& a, const QElem& b) const;
  QElem pow(QElem base, u128 e) const;

  /// The image of a under x -> (other root), i.e. c0 + c1*x' with x + x' = -a1.
  QElem conj(const QElem& a) const;
  /// a * conj(a), an element of Z_m.
  u64 norm(const QElem& a) const;
  /// Throws not_invertible when the norm is not a unit.
  QElem inverse(const QElem& a) const;

 private:
  MonicQuadratic f_;
  u64 m_;
};

}  // namespace wss
