#include "sphex/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sphex {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<BigInt> poly_divide(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  std::vector<BigInt> q(num.size() - den.size() + 1, BigInt(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) fail(Errc::BadArgument, "non-exact polynomial division");
  return q;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::vector<BigInt>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  std::vector<BigInt> num(n + 1, BigInt(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divide(std::move(num), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

CycloNum CycloNum::reduced(unsigned n, std::vector<Rational> raw) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1; // = euler_phi(n), monic
  // remainder of raw modulo the monic cyclotomic polynomial
  for (std::size_t i = raw.size(); i-- > deg;) {
    Rational c = raw[i];
    if (c == 0) continue;
    raw[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * Rational(phi_poly[j]);
  }
  raw.resize(deg);
  CycloNum out;
  out.conductor_ = n;
  out.coeffs_ = std::move(raw);
  return out;
}

CycloNum CycloNum::root_of_unity(unsigned n, unsigned k) {
  if (n == 0) fail(Errc::BadArgument, "conductor must be positive");
  std::vector<Rational> raw(n, Rational(0));
  raw[k % n] = 1;
  return reduced(n, std::move(raw));
}

CycloNum CycloNum::from_exponents(unsigned n, const std::map<unsigned, Rational>& coeffs) {
  std::vector<Rational> raw(n, Rational(0));
  for (const auto& [k, c] : coeffs) raw[k % n] += c;
  return reduced(n, std::move(raw));
}

bool CycloNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> CycloNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::optional<BigInt> CycloNum::as_integer() const {
  if (!is_rational()) return std::nullopt;
  if (denominator(coeffs_[0]) != 1) return std::nullopt;
  return numerator(coeffs_[0]);
}

CycloNum CycloNum::lifted(unsigned n) const {
  if (n == conductor_) return *this;
  if (n % conductor_ != 0) fail(Errc::BadArgument, "lift target must be a conductor multiple");
  const unsigned step = n / conductor_;
  std::vector<Rational> raw(n, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[(k * step) % n] += coeffs_[k];
  return reduced(n, std::move(raw));
}

CycloNum CycloNum::galois(unsigned k) const {
  k %= conductor_;
  if (std::gcd(k, conductor_) != 1) fail(Errc::NotCoprime, "galois exponent not coprime to conductor");
  std::vector<Rational> raw(conductor_, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    raw[(j * static_cast<std::size_t>(k)) % conductor_] += coeffs_[j];
  return reduced(conductor_, std::move(raw));
}

CycloNum CycloNum::conjugated() const {
  return conductor_ == 1 ? *this : galois(conductor_ - 1);
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  unsigned n = std::lcm(a.conductor_, b.conductor_);
  CycloNum x = a.lifted(n), y = b.lifted(n);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CycloNum CycloNum::operator-() const {
  CycloNum x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  unsigned n = std::lcm(a.conductor_, b.conductor_);
  CycloNum x = a.lifted(n), y = b.lifted(n);
  std::vector<Rational> raw(2 * x.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  raw.resize(std::max<std::size_t>(raw.size(), n), Rational(0));
  return CycloNum::reduced(n, std::move(raw));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  unsigned n = std::lcm(a.conductor(), b.conductor());
  return a.lifted(n).coeffs() == b.lifted(n).coeffs();
}

// ---------------------------------------------------------------- printing

namespace {

std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return "q(" + numerator(q).str() + "/" + denominator(q).str() + ")";
}

} // namespace

std::string CycloNum::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (k == 0) {
      out += rational_str(mag);
    } else {
      std::string atom = "z(" + std::to_string(conductor_) + "," + std::to_string(k) + ")";
      if (mag == 1)
        out += atom;
      else
        out += rational_str(mag) + "*" + atom;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

struct CycloParser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (digits.empty()) fail(Errc::ParseError, "expected integer in: " + s);
    BigInt v(digits);
    return neg ? BigInt(-v) : v;
  }

  CycloNum factor() {
    skip_ws();
    if (i >= s.size()) fail(Errc::ParseError, "unexpected end of value: " + s);
    if (s.compare(i, 2, "q(") == 0) {
      i += 2;
      BigInt num = integer();
      if (!eat('/')) fail(Errc::ParseError, "expected '/' in q(a/b): " + s);
      BigInt den = integer();
      if (!eat(')')) fail(Errc::ParseError, "expected ')' in q(a/b): " + s);
      if (den == 0) fail(Errc::ParseError, "zero denominator: " + s);
      return CycloNum(Rational(num, den));
    }
    if (s.compare(i, 2, "z(") == 0) {
      i += 2;
      BigInt n = integer();
      if (!eat(',')) fail(Errc::ParseError, "expected ',' in z(N,k): " + s);
      BigInt k = integer();
      if (!eat(')')) fail(Errc::ParseError, "expected ')' in z(N,k): " + s);
      if (n <= 0 || k < 0) fail(Errc::ParseError, "bad root of unity: " + s);
      return CycloNum::root_of_unity(static_cast<unsigned>(n), static_cast<unsigned>(k % n));
    }
    return CycloNum(Rational(integer()));
  }

  CycloNum term() {
    CycloNum v = factor();
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  CycloNum expression() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    CycloNum v = term();
    if (neg) v = -v;
    for (;;) {
      skip_ws();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        bool sub = s[i] == '-';
        ++i;
        CycloNum t = term();
        v = sub ? v - t : v + t;
      } else {
        break;
      }
    }
    skip_ws();
    if (i != s.size()) fail(Errc::ParseError, "trailing characters in value: " + s);
    return v;
  }
};

} // namespace

CycloNum CycloNum::parse(const std::string& text) {
  CycloParser p{text};
  return p.expression();
}

} // namespace sphex
