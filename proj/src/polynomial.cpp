#include "wsscodes/polynomial.hpp"

#include <algorithm>

namespace wss {

ZmPoly::ZmPoly(std::vector<u64> coeffs, u64 modulus) : c_(std::move(coeffs)), m_(modulus) {
  require(modulus >= 2, "modulus must be at least 2");
  for (auto& c : c_) c %= m_;
  trim();
}

ZmPoly ZmPoly::from(const MonicQuadratic& f) {
  return {{f.a0_value(), f.a1_value(), 1}, f.modulus()};
}

ZmPoly ZmPoly::x_pow_minus_one(u64 n, u64 modulus) {
  std::vector<u64> c(n + 1, 0);
  c[0] = modulus - 1;
  c[n] = addmod(c[n], 1, modulus);
  return {std::move(c), modulus};
}

void ZmPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZmPoly ZmPoly::operator+(const ZmPoly& o) const {
  require(m_ == o.m_, "polynomials over different rings");
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod(coeff(i), o.coeff(i), m_);
  return {std::move(r), m_};
}

ZmPoly ZmPoly::operator-(const ZmPoly& o) const {
  require(m_ == o.m_, "polynomials over different rings");
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod(coeff(i), o.coeff(i), m_);
  return {std::move(r), m_};
}

ZmPoly ZmPoly::operator*(const ZmPoly& o) const {
  require(m_ == o.m_, "polynomials over different rings");
  if (is_zero() || o.is_zero()) return {{}, m_};
  std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(c_[i], o.c_[j], m_), m_);
  return {std::move(r), m_};
}

ZmPoly::DivMod ZmPoly::divmod(const ZmPoly& d) const {
  require(m_ == d.m_, "polynomials over different rings");
  require(!d.is_zero() && d.c_.back() == 1, "divisor must be monic");
  std::vector<u64> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  if (rem.size() <= dd) return {ZmPoly({}, m_), *this};
  std::vector<u64> quo(rem.size() - dd, 0);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const u64 lead = rem[k];
    if (lead == 0) continue;
    quo[k - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[k - dd + j] = submod(rem[k - dd + j], mulmod(lead, d.c_[j], m_), m_);
  }
  rem.resize(dd);
  return {ZmPoly(std::move(quo), m_), ZmPoly(std::move(rem), m_)};
}

std::string ZmPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const u64 c = c_[k];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0 || c != 1) s += std::to_string(c);
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace wss
