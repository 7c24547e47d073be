#include "sphex/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sphex/models.hpp"

namespace sphex {

namespace {

// conjugacy orbit of a subgroup; members sorted, gens conjugated alongside
struct Orbit {
  std::vector<std::vector<ElemId>> members;
  std::vector<std::vector<ElemId>> gens;
};

Orbit subgroup_orbit(const FiniteGroup& g, const std::vector<ElemId>& members, const std::vector<ElemId>& gens) {
  Orbit orb;
  std::map<std::vector<ElemId>, std::size_t> seen;
  orb.members.push_back(members);
  orb.gens.push_back(gens);
  seen.emplace(members, 0);
  for (std::size_t at = 0; at < orb.members.size(); ++at) {
    for (ElemId t : g.generator_ids()) {
      auto conj = conjugate_members(g, orb.members[at], t);
      if (seen.emplace(conj, orb.members.size()).second) {
        std::vector<ElemId> cg;
        cg.reserve(orb.gens[at].size());
        for (ElemId e : orb.gens[at]) cg.push_back(g.conj(e, t));
        orb.members.push_back(std::move(conj));
        orb.gens.push_back(std::move(cg));
      }
    }
  }
  return orb;
}

struct RawClass {
  std::vector<std::vector<ElemId>> members;
  std::vector<std::vector<ElemId>> gens;
};

} // namespace

struct LatticeBuilder {
  static SubgroupLattice finalize(const FiniteGroup& g, std::vector<RawClass> raw);
};

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    fail(Errc::CapExceeded, "subgroup enumeration capped at order " + std::to_string(cap));

  std::vector<RawClass> raw;
  std::map<std::vector<ElemId>, int> known;

  auto add_subgroup = [&](const std::vector<ElemId>& members, const std::vector<ElemId>& gens) -> bool {
    if (known.count(members)) return false;
    Orbit orb = subgroup_orbit(g, members, gens);
    int cls = static_cast<int>(raw.size());
    for (auto& m : orb.members) known.emplace(m, cls);
    raw.push_back({std::move(orb.members), std::move(orb.gens)});
    return true;
  };

  // seed: trivial and all cyclic subgroups
  add_subgroup({g.identity()}, {g.identity()});
  for (ElemId e = 0; e < g.order(); ++e) {
    std::vector<ElemId> cyc;
    ElemId x = e;
    do {
      cyc.push_back(x);
      x = g.mul(x, e);
    } while (x != e);
    std::sort(cyc.begin(), cyc.end());
    add_subgroup(cyc, {e});
  }

  // join class representatives with cyclic generators until closed
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const std::vector<ElemId> base_members = raw[c].members[0];
    const std::vector<ElemId> base_gens = raw[c].gens[0];
    if (base_members.size() == g.order()) continue;
    for (ElemId e = 0; e < g.order(); ++e) {
      if (std::binary_search(base_members.begin(), base_members.end(), e)) continue;
      std::vector<ElemId> seed = base_gens;
      seed.push_back(e);
      auto closure = closure_members(g, seed);
      if (!known.count(closure)) {
        Subgroup h = subgroup_closure(g, seed);
        add_subgroup(h.members, h.gens);
      }
    }
  }
  return LatticeBuilder::finalize(g, std::move(raw));
}

SubgroupLattice lattice_from_representatives(const FiniteGroup& g,
                                             const std::vector<std::vector<ElemId>>& reps) {
  std::vector<RawClass> raw;
  std::map<std::vector<ElemId>, int> known;
  for (const auto& members : reps) {
    if (closure_members(g, members) != members)
      fail(Errc::BadArgument, "cached representative is not a closed subgroup");
    if (known.count(members)) fail(Errc::BadArgument, "duplicate cached class");
    Subgroup h = subgroup_closure(g, members);
    Orbit orb = subgroup_orbit(g, h.members, h.gens);
    int cls = static_cast<int>(raw.size());
    for (auto& m : orb.members) known.emplace(m, cls);
    raw.push_back({std::move(orb.members), std::move(orb.gens)});
  }
  // cheap completeness probe: every cyclic subgroup must be covered
  for (ElemId e = 0; e < g.order(); ++e) {
    std::vector<ElemId> cyc;
    ElemId x = e;
    do {
      cyc.push_back(x);
      x = g.mul(x, e);
    } while (x != e);
    std::sort(cyc.begin(), cyc.end());
    if (!known.count(cyc)) fail(Errc::BadArgument, "cached lattice misses a cyclic subgroup");
  }
  return LatticeBuilder::finalize(g, std::move(raw));
}

SubgroupLattice LatticeBuilder::finalize(const FiniteGroup& g, std::vector<RawClass> raw) {
  SubgroupLattice lat;
  lat.group_ = &g;

  // canonical class order and representatives
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> min_conj(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) {
    min_conj[c] = static_cast<std::size_t>(
        std::min_element(raw[c].members.begin(), raw[c].members.end()) - raw[c].members.begin());
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ka = std::tuple(raw[a].members[0].size(), raw[a].members.size(), raw[a].members[min_conj[a]]);
    auto kb = std::tuple(raw[b].members[0].size(), raw[b].members.size(), raw[b].members[min_conj[b]]);
    return ka < kb;
  });

  lat.classes_.resize(raw.size());
  lat.conj_members_.resize(raw.size());
  lat.conj_gens_.resize(raw.size());
  for (std::size_t ci = 0; ci < order.size(); ++ci) {
    RawClass& rc = raw[order[ci]];
    SubgroupClass& sc = lat.classes_[ci];
    std::size_t mi = min_conj[order[ci]];
    sc.representative.parent = &g;
    sc.representative.members = rc.members[mi];
    sc.representative.gens = rc.gens[mi];
    sc.class_size = rc.members.size();
    sc.is_normal = sc.class_size == 1;
    for (ElemId e : sc.representative.members) sc.profile.push_back(g.class_of(e));
    std::sort(sc.profile.begin(), sc.profile.end());
    lat.conj_members_[ci] = std::move(rc.members);
    lat.conj_gens_[ci] = std::move(rc.gens);
    for (const auto& m : lat.conj_members_[ci]) lat.member_to_class_[m] = static_cast<int>(ci);
  }

  // isomorphism-type names; the full group is labelled by its own name
  for (std::size_t ci = 0; ci < lat.classes_.size(); ++ci) {
    SubgroupClass& sc = lat.classes_[ci];
    if (sc.order() == g.order() && !g.name().empty()) {
      sc.iso_name = g.name();
      sc.fingerprint = iso_fingerprint(g);
      continue;
    }
    FiniteGroup as_group = [&] {
      std::vector<Permutation> gens;
      for (ElemId e : sc.representative.gens) gens.push_back(g.perm(e));
      return generate_group(std::move(gens), sc.order() + 1);
    }();
    sc.fingerprint = iso_fingerprint(as_group);
    if (sc.order() <= 256) {
      auto name = models::recognize(as_group);
      sc.iso_name = name ? *name : "[" + std::to_string(sc.order()) + ",?]";
    } else {
      sc.iso_name = "[" + std::to_string(sc.order()) + ",?]";
    }
  }

  // unique labels: same iso name gets _A, _B, ... ordered by member profile
  {
    std::map<std::string, std::vector<int>> groups;
    for (std::size_t ci = 0; ci < lat.classes_.size(); ++ci) groups[lat.classes_[ci].iso_name].push_back(ci);
    for (auto& [name, idxs] : groups) {
      if (idxs.size() == 1) {
        lat.classes_[idxs[0]].label = name;
        continue;
      }
      std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
        const auto& ca = lat.classes_[a];
        const auto& cb = lat.classes_[b];
        return std::tie(ca.profile, ca.representative.members) < std::tie(cb.profile, cb.representative.members);
      });
      char suffix = 'A';
      for (int ci : idxs) lat.classes_[ci].label = name + "_" + std::string(1, suffix++);
    }
  }

  // containment up to conjugacy, then covering edges (transitive reduction)
  const std::size_t nc = lat.classes_.size();
  lat.leq_.assign(nc, std::vector<bool>(nc, false));
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nc; ++b) {
      if (a == b) {
        lat.leq_[a][b] = true;
        continue;
      }
      const auto& bm = lat.classes_[b].representative.members;
      if (bm.size() % lat.classes_[a].order() != 0 || lat.classes_[a].order() >= bm.size()) continue;
      for (const auto& am : lat.conj_members_[a]) {
        if (subset_of(am, bm)) {
          lat.leq_[a][b] = true;
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nc; ++b) {
      if (a == b || !lat.leq_[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < nc && covered; ++c) {
        if (c == a || c == b) continue;
        if (lat.leq_[a][c] && lat.leq_[c][b]) covered = false;
      }
      if (covered) lat.edges_.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  std::sort(lat.edges_.begin(), lat.edges_.end());
  return lat;
}

int SubgroupLattice::identify(const std::vector<ElemId>& members) const {
  auto it = member_to_class_.find(members);
  if (it != member_to_class_.end()) return it->second;
  fail(Errc::BadArgument, "subgroup not found in lattice (is it a subgroup of this group?)");
}

int SubgroupLattice::class_index_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return static_cast<int>(i);
  return -1;
}

const SubgroupClass& SubgroupLattice::by_label(const std::string& label) const {
  int i = class_index_by_label(label);
  if (i < 0) fail(Errc::BadArgument, "no subgroup class labelled " + label);
  return classes_[i];
}

std::size_t SubgroupLattice::total_subgroups() const {
  std::size_t n = 0;
  for (const auto& c : classes_) n += c.class_size;
  return n;
}

std::string SubgroupLattice::export_text() const {
  std::ostringstream os;
  for (const auto& c : classes_) {
    os << "class " << c.label << " order=" << c.order() << " size=" << c.class_size
       << " normal=" << (c.is_normal ? 1 : 0) << '\n';
  }
  for (auto [a, b] : edges_) os << "edge " << classes_[a].label << " < " << classes_[b].label << '\n';
  return os.str();
}

bool generates(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<ElemId> seed = a.gens;
  seed.insert(seed.end(), b.gens.begin(), b.gens.end());
  return closure_members(g, seed).size() == g.order();
}

int intersection_class(const SubgroupLattice& lat, const Subgroup& a, const Subgroup& b) {
  return lat.identify(intersect_members(a.members, b.members));
}

Subgroup index_two_core(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  std::vector<ElemId> core;
  core.resize(g.order());
  std::iota(core.begin(), core.end(), ElemId{0});
  for (std::size_t ci = 0; ci < lat.classes().size(); ++ci) {
    if (lat.classes()[ci].order() * 2 < g.order()) continue;
    for (const auto& m : lat.conjugate_members(static_cast<int>(ci))) core = intersect_members(core, m);
  }
  return make_subgroup(g, core);
}

} // namespace sphex
