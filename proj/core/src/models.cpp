#include "sphex/models.hpp"

#include <functional>
#include <numeric>

namespace sphex {
namespace models {

namespace {

Permutation cycle(unsigned degree, std::initializer_list<unsigned> pts1) {
  std::string s = "(";
  bool first = true;
  for (unsigned p : pts1) {
    if (!first) s += ' ';
    s += std::to_string(p);
    first = false;
  }
  s += ')';
  return Permutation::parse_cycles(s, degree);
}

} // namespace

FiniteGroup cyclic(unsigned n) {
  if (n == 1) return generate_group({Permutation::identity(1)}, 2, "C1");
  std::vector<Point> im(n);
  for (unsigned i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return generate_group({Permutation(std::move(im))}, n + 1, "C" + std::to_string(n));
}

FiniteGroup klein_four() {
  return generate_group({cycle(4, {1, 2}), cycle(4, {3, 4})}, 8, "C2^2");
}

FiniteGroup dihedral(unsigned n) {
  std::vector<Point> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return generate_group({Permutation(std::move(rot)), Permutation(std::move(refl))}, 4 * n,
                        "D" + std::to_string(2 * n));
}

FiniteGroup dicyclic(unsigned n) {
  // regular action on 4n symbols (i, e), i < 2n, e in {0,1}:
  // a(j, d) = (1 + j, d);  b(j, 0) = (-j, 1), b(j, 1) = (n - j, 0)
  const unsigned m = 2 * n;
  auto idx = [m](unsigned i, unsigned e) { return e * m + i; };
  std::vector<Point> a(4 * n), b(4 * n);
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned e = 0; e < 2; ++e) {
      a[idx(j, e)] = static_cast<Point>(idx((j + 1) % m, e));
      b[idx(j, e)] = static_cast<Point>(e == 0 ? idx((m - j) % m, 1) : idx((n + m - j) % m, 0));
    }
  }
  std::string name = n == 2 ? "Q8" : n == 4 ? "Q16" : "Dic" + std::to_string(n);
  return generate_group({Permutation(std::move(a)), Permutation(std::move(b))}, 8 * n, name);
}

FiniteGroup symmetric(unsigned n) {
  if (n < 2) return cyclic(1);
  std::vector<Permutation> gens{cycle(n, {1, 2})};
  if (n > 2) {
    std::vector<Point> im(n);
    for (unsigned i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
    gens.push_back(Permutation(std::move(im)));
  }
  unsigned long long ord = 1;
  for (unsigned i = 2; i <= n; ++i) ord *= i;
  return generate_group(std::move(gens), ord + 1, "S" + std::to_string(n));
}

FiniteGroup alternating(unsigned n) {
  if (n == 4) return generate_group({cycle(4, {1, 2, 3}), cycle(4, {1, 2, 4})}, 13, "A4");
  if (n == 5) return generate_group({cycle(5, {1, 2, 3}), cycle(5, {1, 2, 3, 4, 5})}, 61, "A5");
  fail(Errc::BadArgument, "alternating model only built for n = 4, 5");
}

FiniteGroup frobenius20() {
  return generate_group({cycle(5, {1, 2, 3, 4, 5}), cycle(5, {2, 3, 5, 4})}, 21, "F5");
}

FiniteGroup c5_rtimes_c8() {
  // regular action on (i, j) in Z5 x Z8, b a b^-1 = a^2
  auto idx = [](unsigned i, unsigned j) { return j * 5 + i; };
  std::vector<Point> a(40), b(40);
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      a[idx(i, j)] = static_cast<Point>(idx((i + 1) % 5, j));
      b[idx(i, j)] = static_cast<Point>(idx((2 * i) % 5, (j + 1) % 8));
    }
  }
  return generate_group({Permutation(std::move(a)), Permutation(std::move(b))}, 41, "C5:C8");
}

namespace {

// permutation action of a 2x2 matrix over Fq (or Fq[i] for q = 3) on the
// nonzero vectors of the plane
struct Fq2Action {
  unsigned q;
  std::vector<std::pair<unsigned, unsigned>> points; // nonzero vectors

  explicit Fq2Action(unsigned q_) : q(q_) {
    for (unsigned x = 0; x < q; ++x)
      for (unsigned y = 0; y < q; ++y)
        if (x || y) points.emplace_back(x, y);
  }
  unsigned index(unsigned x, unsigned y) const {
    for (unsigned i = 0; i < points.size(); ++i)
      if (points[i] == std::pair{x, y}) return i;
    fail(Errc::BadArgument, "vector not found");
  }
  Permutation act(unsigned a, unsigned b, unsigned c, unsigned d) const {
    std::vector<Point> im(points.size());
    for (unsigned i = 0; i < points.size(); ++i) {
      auto [x, y] = points[i];
      im[i] = static_cast<Point>(index((a * x + b * y) % q, (c * x + d * y) % q));
    }
    return Permutation(std::move(im));
  }
};

} // namespace

FiniteGroup sl2(unsigned q) {
  if (q != 3 && q != 5) fail(Errc::BadArgument, "sl2 model only built for q = 3, 5");
  Fq2Action act(q);
  Permutation s = act.act(0, q - 1, 1, 0);
  Permutation t = act.act(1, 1, 0, 1);
  return generate_group({s, t}, q == 3 ? 25 : 121, "SL(2," + std::to_string(q) + ")");
}

FiniteGroup binary_octahedral() {
  // <SL(2,3), w> inside GL(2,9), F9 = F3[u]/(u^2+1), w = diag(2u, u);
  // conjugation by w realizes the outer automorphism and w^2 = -I, which
  // makes the extension non-split (unique involution)
  struct F9 {
    static unsigned mul(unsigned a, unsigned b) { // elements coded a0 + 3*a1 for a0 + a1 u
      unsigned a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
      unsigned c0 = (a0 * b0 + 2 * a1 * b1) % 3; // u^2 = -1 = 2
      unsigned c1 = (a0 * b1 + a1 * b0) % 3;
      return c0 + 3 * c1;
    }
    static unsigned add(unsigned a, unsigned b) {
      return (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3);
    }
  };
  std::vector<std::pair<unsigned, unsigned>> pts;
  for (unsigned x = 0; x < 9; ++x)
    for (unsigned y = 0; y < 9; ++y)
      if (x || y) pts.emplace_back(x, y);
  auto index = [&](unsigned x, unsigned y) -> unsigned {
    for (unsigned i = 0; i < pts.size(); ++i)
      if (pts[i] == std::pair{x, y}) return i;
    fail(Errc::BadArgument, "vector not found");
  };
  auto act = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<Point> im(pts.size());
    for (unsigned i = 0; i < pts.size(); ++i) {
      auto [x, y] = pts[i];
      im[i] = static_cast<Point>(index(F9::add(F9::mul(a, x), F9::mul(b, y)),
                                       F9::add(F9::mul(c, x), F9::mul(d, y))));
    }
    return Permutation(std::move(im));
  };
  const unsigned u = 3, two_u = 6; // u and 2u
  Permutation s = act(0, 2, 1, 0);
  Permutation t = act(1, 1, 0, 1);
  Permutation w = act(two_u, 0, 0, u);
  return generate_group({s, t, w}, 49, "[48,28]");
}

std::optional<std::string> recognize(const FiniteGroup& g) {
  const std::size_t n = g.order();
  // cyclic groups need no backtracking
  for (ElemId e = 0; e < n; ++e)
    if (g.element_order(e) == n) return "C" + std::to_string(n);

  using Builder = std::function<FiniteGroup()>;
  std::vector<std::pair<std::size_t, Builder>> zoo = {
      {4, [] { return klein_four(); }},
      {6, [] { return symmetric(3); }},
      {8, [] { return dihedral(4); }},
      {8, [] { return dicyclic(2); }},
      {10, [] { return dihedral(5); }},
      {12, [] { return dicyclic(3); }},
      {12, [] { return alternating(4); }},
      {12, [] { return dihedral(6); }},
      {16, [] { return dicyclic(4); }},
      {20, [] { return dicyclic(5); }},
      {20, [] { return frobenius20(); }},
      {24, [] { return dicyclic(6); }},
      {24, [] { return sl2(3); }},
      {24, [] { return symmetric(4); }},
      {40, [] { return c5_rtimes_c8(); }},
      {48, [] { return binary_octahedral(); }},
      {60, [] { return alternating(5); }},
      {120, [] { return sl2(5); }},
      {120, [] { return symmetric(5); }},
  };
  for (auto& [order, build] : zoo) {
    if (order != n) continue;
    FiniteGroup model = build();
    if (is_isomorphic(g, model)) {
      const std::string& nm = model.name();
      if (nm == "Dic3") return "[12,1]";
      if (nm == "Dic5") return "[20,1]";
      if (nm == "Dic6") return "[24,4]";
      if (nm == "S3" && g.order() == 6) return "S3";
      return nm;
    }
  }
  return std::nullopt;
}

} // namespace models
} // namespace sphex
