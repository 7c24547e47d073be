#include "sphex/oliver.hpp"

#include <algorithm>

namespace sphex {

bool is_prime_power(std::size_t n) {
  if (n == 0) return false;
  if (n == 1) return true;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true; // prime
}

namespace {

// H/P cyclic iff some coset has order [H:P]
bool quotient_cyclic(const FiniteGroup& g, const std::vector<ElemId>& h, const std::vector<ElemId>& p) {
  const std::size_t m = h.size() / p.size();
  if (m == 1) return true;
  for (ElemId e : h) {
    std::size_t t = 1;
    ElemId x = e;
    while (!std::binary_search(p.begin(), p.end(), x)) {
      x = g.mul(x, e);
      ++t;
    }
    if (t == m) return true;
  }
  return false;
}

bool normal_in_members(const FiniteGroup& g, const std::vector<ElemId>& sub, const std::vector<ElemId>& amb,
                       const std::vector<ElemId>& amb_gens) {
  for (ElemId t : amb_gens)
    if (conjugate_members(g, sub, t) != sub) return false;
  (void)amb;
  return true;
}

} // namespace

OliverVerdict oliver_verdict(const SubgroupLattice& lat, const Subgroup& k) {
  const FiniteGroup& g = lat.group();
  // every subgroup of k, from the lattice's global store
  std::vector<std::pair<const std::vector<ElemId>*, const std::vector<ElemId>*>> subs; // (members, gens)
  for (std::size_t c = 0; c < lat.classes().size(); ++c) {
    const auto& mem = lat.conjugate_members(static_cast<int>(c));
    const auto& gen = lat.conjugate_gens(static_cast<int>(c));
    for (std::size_t i = 0; i < mem.size(); ++i)
      if (mem[i].size() <= k.members.size() && subset_of(mem[i], k.members)) subs.emplace_back(&mem[i], &gen[i]);
  }
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) { return *a.first < *b.first; });

  std::vector<ElemId> k_gens = k.gens;
  for (const auto& [h_mem, h_gen] : subs) {
    if (!is_prime_power(k.members.size() / h_mem->size())) continue; // [K:H]
    if (!normal_in_members(g, *h_mem, k.members, k_gens)) continue;  // H <| K
    for (const auto& [p_mem, p_gen] : subs) {
      if (!subset_of(*p_mem, *h_mem)) continue;
      if (!is_prime_power(p_mem->size())) continue;               // |P|
      if (!normal_in_members(g, *p_mem, *h_mem, *h_gen)) continue; // P <| H
      if (!quotient_cyclic(g, *h_mem, *p_mem)) continue;           // H/P cyclic
      OliverVerdict v;
      v.is_oliver = false;
      v.witness = OliverChain{*p_mem, *h_mem};
      return v;
    }
  }
  OliverVerdict v;
  v.is_oliver = true;
  return v;
}

bool verify_oliver_chain(const FiniteGroup& g, const std::vector<ElemId>& k_members, const OliverChain& chain) {
  const auto& p = chain.p_members;
  const auto& h = chain.h_members;
  if (p.empty() || h.empty() || k_members.empty()) return false;
  if (!std::is_sorted(p.begin(), p.end()) || !std::is_sorted(h.begin(), h.end())) return false;
  if (!subset_of(p, h) || !subset_of(h, k_members)) return false;

  // closure of P and of H, from scratch
  auto closed = [&](const std::vector<ElemId>& m) {
    for (ElemId a : m)
      for (ElemId b : m)
        if (!std::binary_search(m.begin(), m.end(), g.mul(a, b))) return false;
    return true;
  };
  if (!closed(p) || !closed(h)) return false;
  if (h.size() % p.size() != 0 || k_members.size() % h.size() != 0) return false;

  // |P| and [K:H] prime powers (1 included)
  auto pp = [](std::size_t n) {
    if (n == 1) return true;
    std::size_t q = 0;
    for (std::size_t d = 2; d <= n; ++d) {
      if (n % d == 0) {
        q = d;
        break;
      }
    }
    while (n % q == 0) n /= q;
    return n == 1;
  };
  if (!pp(p.size()) || !pp(k_members.size() / h.size())) return false;

  // normality by conjugation with every ambient element
  for (ElemId t : h)
    for (ElemId x : p)
      if (!std::binary_search(p.begin(), p.end(), g.conj(x, t))) return false;
  for (ElemId t : k_members)
    for (ElemId x : h)
      if (!std::binary_search(h.begin(), h.end(), g.conj(x, t))) return false;

  // H/P cyclic: some element's coset order reaches [H:P]
  const std::size_t m = h.size() / p.size();
  if (m > 1) {
    bool cyc = false;
    for (ElemId e : h) {
      std::size_t t = 1;
      ElemId x = e;
      while (!std::binary_search(p.begin(), p.end(), x)) {
        x = g.mul(x, e);
        ++t;
      }
      if (t == m) {
        cyc = true;
        break;
      }
    }
    if (!cyc) return false;
  }
  return true;
}

} // namespace sphex
