#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphex/error.hpp"

namespace sphex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// coefficient vector of the N-th cyclotomic polynomial, low degree first
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

// Exact element of Q(zeta_N), kept reduced into the power basis
// {zeta^0, ..., zeta^(phi(N)-1)} modulo the N-th cyclotomic polynomial,
// so equality is coefficient equality at a common conductor.  Arithmetic
// lifts both operands to the lcm of their conductors.  No floating point
// anywhere.
class CycloNum {
public:
  CycloNum() : conductor_(1), coeffs_(1, Rational(0)) {}
  CycloNum(long v) : conductor_(1), coeffs_(1, Rational(v)) {}
  explicit CycloNum(const Rational& v) : conductor_(1), coeffs_(1, v) {}

  // zeta_N^k
  static CycloNum root_of_unity(unsigned n, unsigned k);
  // raw sum  sum coeffs[k] * zeta_N^k  (indices 0..N-1), reduced
  static CycloNum from_exponents(unsigned n, const std::map<unsigned, Rational>& coeffs);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  // integer value iff all non-constant coefficients vanish and the
  // constant term is integral
  std::optional<BigInt> as_integer() const;

  CycloNum lifted(unsigned n) const; // to conductor n (multiple of current)
  CycloNum galois(unsigned k) const; // zeta -> zeta^k, gcd(k, conductor) = 1
  CycloNum conjugated() const;       // complex conjugation, k = N-1

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }

  friend bool operator==(const CycloNum& a, const CycloNum& b);

  // canonical text encoding: integers, q(a/b) rationals, z(N,k) roots of
  // unity, combined with +, - and integer or q(a/b) multipliers;
  // e.g. "2*z(12,1)+2*z(12,11)".  print/parse round-trips bit-exactly.
  std::string to_string() const;
  static CycloNum parse(const std::string& text);

private:
  unsigned conductor_;
  std::vector<Rational> coeffs_; // size phi(conductor_)

  static CycloNum reduced(unsigned n, std::vector<Rational> raw); // raw size n
};

} // namespace sphex
