#include "wsscodes/quadratic.hpp"

#include <cctype>
#include <charconv>

namespace wss {

MonicQuadratic::MonicQuadratic(i128 a1, i128 a0, u64 modulus)
    : a1_(0), a0_(0), m_(modulus) {
  require(modulus >= 2, "modulus must be at least 2");
  a1_ = wss::reduce(a1, modulus);
  a0_ = wss::reduce(a0, modulus);
}

MonicQuadratic::MonicQuadratic(const Residue& a1, const Residue& a0)
    : MonicQuadratic(a1.value(), a0.value(), a1.modulus()) {
  require(a1.modulus() == a0.modulus(), "coefficients must share one modulus");
}

Residue MonicQuadratic::discriminant() const {
  return a1() * a1() - Residue(4, m_) * a0();
}

i128 MonicQuadratic::integer_discriminant() const {
  return static_cast<i128>(a1_) * a1_ - 4 * static_cast<i128>(a0_);
}

Residue MonicQuadratic::evaluate(const Residue& x) const {
  return x * x + a1() * x + a0();
}

MonicQuadratic MonicQuadratic::reduce(u64 divisor) const {
  require(divisor >= 2 && m_ % divisor == 0,
          std::to_string(divisor) + " does not divide modulus " + std::to_string(m_));
  return {a1_ % divisor, a0_ % divisor, divisor};
}

std::string MonicQuadratic::body() const {
  std::string s = "x^2";
  if (a1_ == 1)
    s += "+x";
  else if (a1_ != 0)
    s += "+" + std::to_string(a1_) + "x";
  if (a0_ != 0) s += "+" + std::to_string(a0_);
  return s;
}

std::string MonicQuadratic::to_string() const {
  return body() + " (mod " + std::to_string(m_) + ")";
}

namespace {

class QuadraticParser {
 public:
  explicit QuadraticParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  MonicQuadratic parse(u64 default_modulus) {
    u64 modulus = default_modulus;
    std::string poly = s_;
    auto mod_pos = poly.find("mod");
    if (mod_pos != std::string::npos) {
      std::string tail = poly.substr(mod_pos + 3);
      poly.erase(mod_pos);
      if (!poly.empty() && poly.back() == '(') {
        poly.pop_back();
        if (tail.empty() || tail.back() != ')') error("unbalanced parenthesis");
        tail.pop_back();
      }
      modulus = number(tail);
      if (default_modulus != 0 && modulus != default_modulus)
        error("modulus clause disagrees with the given modulus " + std::to_string(default_modulus));
    }
    if (modulus < 2) error("missing or invalid modulus");

    i128 c2 = 0, c1 = 0, c0 = 0;
    std::size_t i = 0;
    if (poly.empty()) error("empty polynomial");
    while (i < poly.size()) {
      int sign = 1;
      if (poly[i] == '+' || poly[i] == '-') {
        sign = poly[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        error("expected '+' or '-'");
      }
      std::size_t start = i;
      while (i < poly.size() && std::isdigit(static_cast<unsigned char>(poly[i]))) ++i;
      i128 coef = 1;
      bool has_coef = i > start;
      if (has_coef) coef = number(poly.substr(start, i - start));
      if (i < poly.size() && poly[i] == '*') ++i;
      unsigned degree = 0;
      if (i < poly.size() && (poly[i] == 'x' || poly[i] == 'X')) {
        ++i;
        degree = 1;
        if (i < poly.size() && poly[i] == '^') {
          ++i;
          std::size_t e0 = i;
          while (i < poly.size() && std::isdigit(static_cast<unsigned char>(poly[i]))) ++i;
          if (e0 == i) error("missing exponent");
          degree = static_cast<unsigned>(number(poly.substr(e0, i - e0)));
        }
      } else if (!has_coef) {
        error("expected a term");
      }
      if (degree > 2) error("degree above 2");
      i128& slot = degree == 2 ? c2 : degree == 1 ? c1 : c0;
      slot += sign * coef;
    }
    if (reduce(c2, modulus) != 1 % modulus) error("polynomial is not monic of degree 2");
    return {c1, c0, modulus};
  }

 private:
  [[noreturn]] void error(const std::string& why) const {
    fail(Errc::parse_error, "cannot parse quadratic '" + s_ + "': " + why);
  }

  u64 number(const std::string& digits) const {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) error("bad number '" + digits + "'");
    return v;
  }

  std::string s_;
};

}  // namespace

MonicQuadratic parse_quadratic(std::string_view text, u64 default_modulus) {
  return QuadraticParser(text).parse(default_modulus);
}

QElem QuadRing::x() const {
  return {0, 1 % m_};
}

QElem QuadRing::add(const QElem& a, const QElem& b) const {
  return {addmod(a.c0, b.c0, m_), addmod(a.c1, b.c1, m_)};
}

QElem QuadRing::sub(const QElem& a, const QElem& b) const {
  return {submod(a.c0, b.c0, m_), submod(a.c1, b.c1, m_)};
}

QElem QuadRing::mul(const QElem& a, const QElem& b) const {
  // x^2 = -a1 x - a0
  const u64 hi = mulmod(a.c1, b.c1, m_);
  u64 c0 = submod(mulmod(a.c0, b.c0, m_), mulmod(hi, f_.a0_value(), m_), m_);
  u64 c1 = addmod(mulmod(a.c0, b.c1, m_), mulmod(a.c1, b.c0, m_), m_);
  c1 = submod(c1, mulmod(hi, f_.a1_value(), m_), m_);
  return {c0, c1};
}

QElem QuadRing::pow(QElem base, u128 e) const {
  QElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

QElem QuadRing::conj(const QElem& a) const {
  // x' = -a1 - x
  return {submod(a.c0, mulmod(a.c1, f_.a1_value(), m_), m_), negmod(a.c1, m_)};
}

u64 QuadRing::norm(const QElem& a) const {
  QElem n = mul(a, conj(a));
  return n.c0;
}

QElem QuadRing::inverse(const QElem& a) const {
  Residue inv = mod_inverse(Residue(norm(a), m_));
  QElem c = conj(a);
  return {mulmod(c.c0, inv.value(), m_), mulmod(c.c1, inv.value(), m_)};
}

}  // namespace wss
