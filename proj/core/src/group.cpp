#include "sphex/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sphex {

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, std::size_t cap, std::string name)
    : name_(std::move(name)) {
  if (generators.empty()) fail(Errc::BadArgument, "group needs at least one generator");
  degree_ = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree_) fail(Errc::DegreeMismatch, "generators have mixed degrees");
  gens_ = std::move(generators);

  // breadth-first over generator words, generator order breaking ties
  elems_.push_back(Permutation::identity(degree_));
  index_.emplace(elems_[0], 0);
  for (std::size_t at = 0; at < elems_.size(); ++at) {
    for (const auto& g : gens_) {
      Permutation next = elems_[at] * g;
      if (index_.emplace(next, static_cast<ElemId>(elems_.size())).second) {
        elems_.push_back(std::move(next));
        if (elems_.size() > cap) fail(Errc::CapExceeded, "group order exceeds cap " + std::to_string(cap));
      }
    }
  }

  const std::size_t n = elems_.size();
  inverse_.resize(n);
  elem_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elems_[i].inverse());
    elem_order_[i] = elems_[i].order();
  }
  if (n <= kCayleyMax) {
    cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        cayley_[a * n + b] = static_cast<std::uint16_t>(index_.at(elems_[a] * elems_[b]));
  }
  build_classes();
}

std::vector<ElemId> FiniteGroup::generator_ids() const {
  std::vector<ElemId> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(index_.at(g));
  return out;
}

ElemId FiniteGroup::id_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) fail(Errc::BadArgument, "permutation is not a group element");
  return it->second;
}

ElemId FiniteGroup::mul(ElemId a, ElemId b) const {
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * elems_.size() + b];
  return index_.at(elems_[a] * elems_[b]);
}

ElemId FiniteGroup::power(ElemId g, long long e) const {
  const long long n = element_order(g);
  e %= n;
  if (e < 0) e += n;
  ElemId acc = identity(), base = g;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

void FiniteGroup::build_classes() {
  const std::size_t n = elems_.size();
  class_of_.assign(n, -1);
  std::vector<ElemId> gen_ids = generator_ids();
  std::vector<std::vector<ElemId>> raw;
  for (ElemId i = 0; i < n; ++i) {
    if (class_of_[i] != -1) continue;
    int cid = static_cast<int>(raw.size());
    std::vector<ElemId> orbit{i};
    class_of_[i] = cid;
    for (std::size_t at = 0; at < orbit.size(); ++at) {
      for (ElemId t : gen_ids) {
        ElemId y = conj(orbit[at], t);
        if (class_of_[y] == -1) {
          class_of_[y] = cid;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw.push_back(std::move(orbit));
  }
  std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
    auto ka = std::tuple(elem_order_[a[0]], a.size(), a[0]);
    auto kb = std::tuple(elem_order_[b[0]], b.size(), b[0]);
    return ka < kb;
  });
  classes_.resize(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) {
    auto& cc = classes_[c];
    cc.members = std::move(raw[c]);
    cc.order_of_rep = elem_order_[cc.members[0]];
    cc.representative = *std::min_element(cc.members.begin(), cc.members.end(),
                                          [&](ElemId x, ElemId y) { return elems_[x] < elems_[y]; });
    for (ElemId e : cc.members) class_of_[e] = static_cast<int>(c);
  }
  // labels: representative order, plus capital letters when several classes
  // share that order
  std::map<unsigned, unsigned> count;
  for (const auto& c : classes_) count[c.order_of_rep]++;
  std::map<unsigned, unsigned> seen;
  for (auto& c : classes_) {
    c.label = std::to_string(c.order_of_rep);
    if (count[c.order_of_rep] > 1) c.label += static_cast<char>('A' + seen[c.order_of_rep]++);
  }
}

const ConjugacyClass* FiniteGroup::class_by_label(const std::string& label) const {
  for (const auto& c : classes_)
    if (c.label == label) return &c;
  return nullptr;
}

int FiniteGroup::power_class(unsigned p, int c) const {
  return class_of(power(classes_[c].representative, p));
}

std::vector<ElemId> FiniteGroup::center() const {
  std::vector<ElemId> gen_ids = generator_ids();
  std::vector<ElemId> out;
  for (ElemId x = 0; x < order(); ++x) {
    bool central = true;
    for (ElemId g : gen_ids)
      if (mul(x, g) != mul(g, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<ElemId> FiniteGroup::derived_subgroup_members() const {
  std::vector<ElemId> comms;
  for (ElemId a = 0; a < order(); ++a)
    for (ElemId g : generator_ids()) comms.push_back(mul(mul(inv(a), inv(g)), mul(a, g)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure_members(*this, comms);
}

bool FiniteGroup::is_abelian() const {
  for (ElemId a : generator_ids())
    for (ElemId b : generator_ids())
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

unsigned FiniteGroup::exponent() const {
  unsigned long long e = 1;
  for (const auto& c : classes_) e = std::lcm(e, static_cast<unsigned long long>(c.order_of_rep));
  return static_cast<unsigned>(e);
}

FiniteGroup generate_group(std::vector<Permutation> gens, std::size_t cap, std::string name) {
  return FiniteGroup(std::move(gens), cap, std::move(name));
}

FiniteGroup group_from_file(const std::string& path, std::size_t cap, std::string name) {
  GroupFile gf = read_group_file(path);
  return FiniteGroup(std::move(gf.generators), cap, std::move(name));
}

bool Subgroup::contains(ElemId e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

std::vector<ElemId> closure_members(const FiniteGroup& g, const std::vector<ElemId>& seed) {
  std::vector<ElemId> work{g.identity()};
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  for (ElemId s : seed)
    if (!in[s]) {
      in[s] = true;
      work.push_back(s);
    }
  std::vector<ElemId> gens;
  for (ElemId s : seed)
    if (s != g.identity()) gens.push_back(s);
  for (std::size_t at = 0; at < work.size(); ++at) {
    for (ElemId s : gens) {
      ElemId y = g.mul(work[at], s);
      if (!in[y]) {
        in[y] = true;
        work.push_back(y);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<ElemId>& seed) {
  Subgroup h;
  h.parent = &g;
  h.members = closure_members(g, seed);
  // greedy small generating set
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  std::size_t have = 1;
  for (ElemId e : h.members) {
    if (in[e]) continue;
    h.gens.push_back(e);
    auto part = closure_members(g, h.gens);
    for (ElemId x : part)
      if (!in[x]) {
        in[x] = true;
        ++have;
      }
    if (have == h.members.size()) break;
  }
  if (h.members.size() == 1) h.gens = {g.identity()};
  return h;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<ElemId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h = subgroup_closure(g, members);
  if (h.members != members) fail(Errc::BadArgument, "member set is not closed under products");
  if (g.order() % h.members.size() != 0) fail(Errc::BadArgument, "Lagrange violation");
  return h;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h;
  h.parent = &g;
  h.members.resize(g.order());
  std::iota(h.members.begin(), h.members.end(), ElemId{0});
  h.gens = g.generator_ids();
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Subgroup h;
  h.parent = &g;
  h.members = {g.identity()};
  h.gens = {g.identity()};
  return h;
}

std::map<unsigned, std::size_t> element_order_histogram(const Subgroup& h) {
  std::map<unsigned, std::size_t> out;
  for (ElemId e : h.members) out[h.parent->element_order(e)]++;
  return out;
}

std::vector<ElemId> conjugate_members(const FiniteGroup& g, const std::vector<ElemId>& members, ElemId t) {
  std::vector<ElemId> out;
  out.reserve(members.size());
  for (ElemId e : members) out.push_back(g.conj(e, t));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal_in(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& g = *h.parent;
  for (ElemId t : k.gens)
    if (conjugate_members(g, h.members, t) != h.members) return false;
  return true;
}

std::vector<ElemId> intersect_members(const std::vector<ElemId>& a, const std::vector<ElemId>& b) {
  std::vector<ElemId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<ElemId>& a, const std::vector<ElemId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  for (ElemId t : g.generator_ids())
    if (conjugate_members(g, n.members, t) != n.members)
      fail(Errc::NotNormal, "subgroup is not normal, cannot form quotient");

  QuotientGroup q;
  q.parent = &g;
  q.normal_subgroup = n;
  q.coset_of.assign(g.order(), -1);
  // coset of the identity first, then by least unassigned element
  for (ElemId e = 0; e < g.order(); ++e) {
    if (q.coset_of[e] != -1) continue;
    int cid = static_cast<int>(q.cosets.size());
    std::vector<ElemId> coset;
    coset.reserve(n.members.size());
    for (ElemId m : n.members) coset.push_back(g.mul(e, m));
    std::sort(coset.begin(), coset.end());
    for (ElemId x : coset) q.coset_of[x] = cid;
    q.cosets.push_back(std::move(coset));
  }

  // product table, checked to be representative-independent over all pairs
  const std::size_t m = q.cosets.size();
  q.product.assign(m, std::vector<int>(m, -1));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q.product[a][b] = q.coset_of[g.mul(q.cosets[a][0], q.cosets[b][0])];
  if (g.order() <= 512) {
    for (std::size_t a = 0; a < m; ++a)
      for (ElemId x : q.cosets[a])
        for (std::size_t b = 0; b < m; ++b)
          for (ElemId y : q.cosets[b])
            if (q.coset_of[g.mul(x, y)] != q.product[a][b])
              fail(Errc::NotNormal, "coset product not well-defined");
  }
  return q;
}

FiniteGroup QuotientGroup::to_group() const {
  // left multiplication action of cosets on cosets
  const unsigned m = static_cast<unsigned>(cosets.size());
  std::vector<Permutation> gens;
  for (ElemId t : parent->generator_ids()) {
    std::vector<Point> im(m);
    for (unsigned c = 0; c < m; ++c) im[c] = static_cast<Point>(coset_of[parent->mul(t, cosets[c][0])]);
    gens.push_back(Permutation(std::move(im)));
  }
  std::string nm = parent->name().empty() ? "" : parent->name() + "/N";
  return FiniteGroup(std::move(gens), std::max<std::size_t>(m, 1), nm);
}

std::uint64_t iso_fingerprint(const FiniteGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(g.order());
  mix(g.is_abelian() ? 1 : 0);
  std::map<unsigned, std::size_t> ohist;
  for (ElemId e = 0; e < g.order(); ++e) ohist[g.element_order(e)]++;
  for (auto& [o, c] : ohist) {
    mix(o);
    mix(c);
  }
  std::vector<std::size_t> csizes;
  for (const auto& c : g.classes()) csizes.push_back(c.size());
  std::sort(csizes.begin(), csizes.end());
  for (auto s : csizes) mix(s);
  mix(g.center().size());
  // derived series sizes
  std::vector<ElemId> cur = g.derived_subgroup_members();
  mix(cur.size());
  // second term computed inside the subgroup via commutators of its members
  while (cur.size() > 1) {
    std::vector<ElemId> comms;
    for (ElemId a : cur)
      for (ElemId b : cur) comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    auto next = closure_members(g, comms);
    if (next.size() == cur.size()) break; // perfect
    cur = next;
    mix(cur.size());
  }
  return h;
}

namespace {

struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  std::vector<ElemId> agens;        // minimal generating sequence of a
  std::vector<ElemId> images;       // chosen images in b
  std::vector<ElemId>* witness_out; // optional full map

  // invariant key for candidate filtering
  std::vector<std::pair<unsigned, std::size_t>> akey;

  bool extend(std::size_t k) {
    if (k == agens.size()) return check_full();
    for (const auto& cls : b.classes()) {
      if (cls.order_of_rep != akey[k].first || cls.size() != akey[k].second) continue;
      for (ElemId cand : cls.members) {
        images.push_back(cand);
        if (partial_ok() && extend(k + 1)) return true;
        images.pop_back();
      }
    }
    return false;
  }

  // builds the word-map for <agens[0..images.size())>; false on conflict
  bool build_map(std::vector<ElemId>& map_ab, std::vector<char>& defined) const {
    map_ab.assign(a.order(), 0);
    defined.assign(a.order(), 0);
    std::vector<ElemId> work{a.identity()};
    map_ab[a.identity()] = b.identity();
    defined[a.identity()] = 1;
    for (std::size_t at = 0; at < work.size(); ++at) {
      for (std::size_t j = 0; j < images.size(); ++j) {
        ElemId x = a.mul(work[at], agens[j]);
        ElemId y = b.mul(map_ab[work[at]], images[j]);
        if (defined[x]) {
          if (map_ab[x] != y) return false;
        } else {
          defined[x] = 1;
          map_ab[x] = y;
          work.push_back(x);
        }
      }
    }
    return true;
  }

  bool partial_ok() const {
    std::vector<ElemId> map_ab;
    std::vector<char> defined;
    if (!build_map(map_ab, defined)) return false;
    // injectivity of the partial map
    std::vector<char> hit(b.order(), 0);
    for (ElemId x = 0; x < a.order(); ++x)
      if (defined[x]) {
        if (hit[map_ab[x]]) return false;
        hit[map_ab[x]] = 1;
      }
    return true;
  }

  bool check_full() {
    std::vector<ElemId> map_ab;
    std::vector<char> defined;
    if (!build_map(map_ab, defined)) return false;
    std::size_t n = 0;
    std::vector<char> hit(b.order(), 0);
    for (ElemId x = 0; x < a.order(); ++x) {
      if (!defined[x]) return false;
      if (hit[map_ab[x]]) return false;
      hit[map_ab[x]] = 1;
      ++n;
    }
    if (n != b.order()) return false;
    if (witness_out) *witness_out = map_ab;
    return true;
  }
};

} // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::vector<ElemId>* witness) {
  if (a.order() != b.order()) return false;
  if (std::min(a.order(), b.order()) > 256) fail(Errc::SizeLimit, "isomorphism backtracking limited to order 256");
  if (iso_fingerprint(a) != iso_fingerprint(b)) return false;

  IsoSearch s{a, b, {}, {}, witness, {}};
  // minimal generating sequence by greedy closure growth
  std::vector<ElemId> have{a.identity()};
  while (have.size() < a.order()) {
    for (ElemId e = 0; e < a.order(); ++e) {
      if (std::binary_search(have.begin(), have.end(), e)) continue;
      s.agens.push_back(e);
      have = closure_members(a, s.agens);
      break;
    }
  }
  for (ElemId g : s.agens) {
    const auto& cls = a.classes()[a.class_of(g)];
    s.akey.emplace_back(cls.order_of_rep, cls.size());
  }
  return s.extend(0);
}

} // namespace sphex
