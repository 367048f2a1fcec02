#include "wsscodes/fp2.hpp"

namespace wss {

Fp2Element::Fp2Element(const Residue& c0, const Residue& c1, const MonicQuadratic& reduction)
    : value_{c0.value(), c1.value()}, ring_(reduction) {
  const u64 p = reduction.modulus();
  require(c0.modulus() == p && c1.modulus() == p, "coefficients must live in the base field");
  if (legendre(reduction.discriminant().value(), p) != -1)
    fail(Errc::invalid_argument, reduction.to_string() + " is not irreducible");
}

MonicQuadratic Fp2Element::canonical_reduction(u64 p) {
  return {0, -static_cast<i128>(smallest_nonresidue(p)), p};
}

Fp2Element Fp2Element::canonical(u64 c0, u64 c1, u64 p) {
  return {Residue(c0, p), Residue(c1, p), canonical_reduction(p)};
}

void Fp2Element::check_same(const Fp2Element& o) const {
  require(reduction() == o.reduction(), "elements of different F_p^2 representations");
}

Fp2Element Fp2Element::operator+(const Fp2Element& o) const {
  check_same(o);
  return with(ring_.add(value_, o.value_));
}

Fp2Element Fp2Element::operator-(const Fp2Element& o) const {
  check_same(o);
  return with(ring_.sub(value_, o.value_));
}

Fp2Element Fp2Element::operator*(const Fp2Element& o) const {
  check_same(o);
  return with(ring_.mul(value_, o.value_));
}

Fp2Element Fp2Element::inverse() const {
  if (is_zero()) fail(Errc::not_invertible, "zero has no inverse in F_p^2");
  return with(ring_.inverse(value_));
}

Residue Fp2Element::trace() const {
  return {static_cast<i128>(ring_.add(value_, ring_.conj(value_)).c0), p()};
}

u64 fp2_order(const Fp2Element& x) {
  if (x.is_zero()) fail(Errc::invalid_argument, "zero has no multiplicative order");
  const u64 p = x.p();
  return order_by_descent(factorize_product({p - 1, p + 1}),
                          [&](u128 e) {
                            Fp2Element y = x.pow(e);
                            return y.c0().value() == 1 && y.c1().is_zero();
                          });
}

}  // namespace wss
