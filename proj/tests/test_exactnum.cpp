#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sphex/cyclo.hpp"

using namespace sphex;

namespace {

// Independent reduction oracle: multiply out in Z[x]/(x^N - 1), then reduce
// with a hardcoded cyclotomic relation.  Shares nothing with CycloNum's
// reduction path.
std::vector<Rational> oracle_mul_mod_xn(const std::map<unsigned, Rational>& a,
                                        const std::map<unsigned, Rational>& b, unsigned n) {
  std::vector<Rational> out(n, Rational(0));
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) out[(i + j) % n] += ci * cj;
  return out;
}

CycloNum sqrt2() { return CycloNum::root_of_unity(8, 1) + CycloNum::root_of_unity(8, 7); }
CycloNum sqrt3() { return CycloNum::root_of_unity(12, 1) + CycloNum::root_of_unity(12, 11); }

CycloNum random_cyclo(std::mt19937& rng, unsigned conductor) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<unsigned> exp(0, conductor - 1);
  std::map<unsigned, Rational> m;
  for (int t = 0; t < 4; ++t) m[exp(rng)] += Rational(coef(rng), den(rng));
  return CycloNum::from_exponents(conductor, m);
}

} // namespace

TEST_CASE("cyclotomic polynomials match the Moebius product formula") {
  // independent route: Phi_n(x) = prod_{d | n} (x^(n/d) - 1)^mu(d)
  auto mu = [](unsigned n) {
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    }
    if (n > 1) m = -m;
    return m;
  };
  auto polymul = [](std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    a = c;
  };
  auto polydiv = [](std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      long c = a[i + b.size() - 1] / b.back();
      q[i] = c;
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    a = q;
  };
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u, 24u, 40u, 120u}) {
    std::vector<long> acc{1};
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d != 0 || mu(d) == 0) continue;
      std::vector<long> f(n / d + 1, 0);
      f[0] = -1;
      f[n / d] = 1;
      if (mu(d) == 1) polymul(acc, f);
    }
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d != 0 || mu(d) != -1) continue;
      std::vector<long> f(n / d + 1, 0);
      f[0] = -1;
      f[n / d] = 1;
      polydiv(acc, f);
    }
    const auto& got = cyclotomic_polynomial(n);
    REQUIRE(got.size() == acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) CHECK(got[i] == BigInt(acc[i]));
    CHECK(got.size() == euler_phi(n) + 1);
  }
}

TEST_CASE("sqrt2 squared is 2, via the hardcoded Phi_8 oracle") {
  // (zeta + zeta^7)^2 in Z[x]/(x^8-1) is x^2 + 2 + x^6; with x^4 = -1 the
  // non-constant terms cancel
  auto raw = oracle_mul_mod_xn({{1, 1}, {7, 1}}, {{1, 1}, {7, 1}}, 8);
  CHECK(raw[0] == 2);
  CHECK(raw[2] == 1);
  CHECK(raw[6] == 1);
  CHECK(raw[2] - raw[6] == 0); // x^6 = -x^2 under x^4 = -1
  CycloNum two = sqrt2() * sqrt2();
  CHECK(two == CycloNum(2));
  CHECK(two.as_integer().value() == 2);
}

TEST_CASE("sqrt3 squared is 3") {
  CHECK(sqrt3() * sqrt3() == CycloNum(3));
}

TEST_CASE("sum of primitive fifth roots is -1") {
  CycloNum s = CycloNum::root_of_unity(5, 1) + CycloNum::root_of_unity(5, 2) +
               CycloNum::root_of_unity(5, 3) + CycloNum::root_of_unity(5, 4);
  CHECK(s.as_integer().value() == -1);
}

TEST_CASE("x + (-x) = 0 structurally") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    CycloNum x = random_cyclo(rng, 120);
    CHECK((x + (-x)).is_zero());
  }
}

TEST_CASE("as_integer") {
  CHECK(CycloNum(5).as_integer().value() == 5);
  CHECK_FALSE(sqrt2().as_integer().has_value());
  CHECK_FALSE(sqrt2().is_rational());
  CHECK(CycloNum(Rational(1, 2)).as_integer() == std::nullopt);
  CHECK(CycloNum(Rational(1, 2)).as_rational().value() == Rational(1, 2));
}

TEST_CASE("galois conjugation") {
  CHECK(sqrt2().galois(1) == sqrt2());
  CHECK(sqrt2().galois(3) == -sqrt2());
  CHECK(sqrt2().galois(5) == -sqrt2());
  CHECK(sqrt2().galois(7) == sqrt2());
  CHECK(sqrt3().galois(5) == -sqrt3());
  CHECK(CycloNum(7).lifted(12).galois(5) == CycloNum(7));
  CHECK_THROWS_AS((void)sqrt2().galois(2), Error);
}

TEST_CASE("ring axioms on seeded random triples") {
  std::mt19937 rng(42);
  for (int t = 0; t < 40; ++t) {
    unsigned n = std::vector<unsigned>{8, 12, 24, 120}[t % 4];
    CycloNum a = random_cyclo(rng, n), b = random_cyclo(rng, n), c = random_cyclo(rng, 12);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("complex conjugation is an involution") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    CycloNum a = random_cyclo(rng, 120);
    CHECK(a.conjugated().conjugated() == a);
  }
}

TEST_CASE("print/parse round-trip is bit-exact") {
  std::mt19937 rng(3);
  for (int t = 0; t < 80; ++t) {
    unsigned n = std::vector<unsigned>{1, 2, 5, 8, 12, 120}[t % 6];
    CycloNum a = random_cyclo(rng, n);
    std::string s = a.to_string();
    CycloNum b = CycloNum::parse(s);
    CHECK(a == b);
    CHECK(b.to_string() == s);
  }
  CHECK(CycloNum::parse("2*z(12,1)+2*z(12,11)") == CycloNum(2) * sqrt3());
  CHECK(CycloNum::parse("-z(8,1)-z(8,7)") == -sqrt2());
  CHECK(CycloNum::parse("q(1/2)*z(4,1)+q(1/2)*z(4,3)").is_zero());
  CHECK(CycloNum::parse("0").is_zero());
  CHECK_THROWS_AS(CycloNum::parse("z(8,)"), Error);
  CHECK_THROWS_AS(CycloNum::parse("1 + "), Error);
}

TEST_CASE("conductor lifting preserves value") {
  CycloNum r2 = sqrt2();
  CHECK(r2.lifted(24) == r2);
  CHECK(r2.lifted(120) == r2);
  CHECK(r2.lifted(120).conductor() == 120);
  CHECK((r2.lifted(120) * r2) == CycloNum(2));
}
