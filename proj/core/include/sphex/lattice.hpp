#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sphex/group.hpp"

namespace sphex {

struct SubgroupClass {
  Subgroup representative; // conjugate with lexicographically minimal member vector
  std::size_t class_size = 1;
  std::string label;    // display label, unique ("Q8_A", "[24,4]", ...)
  std::string iso_name; // recognized isomorphism type, without suffix
  std::uint64_t fingerprint = 0;
  bool is_normal = false;
  std::vector<int> profile; // sorted ambient conjugacy-class indices of the members

  std::size_t order() const { return representative.members.size(); }
};

// All subgroups of a finite group up to conjugacy, with containment
// covering edges.  Immutable after construction; safe for concurrent reads.
class SubgroupLattice {
public:
  const FiniteGroup& group() const { return *group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; } // (subclass, superclass) covers

  int identify(const std::vector<ElemId>& members) const; // class index
  int identify(const Subgroup& h) const { return identify(h.members); }
  int class_index_by_label(const std::string& label) const; // -1 when absent
  const SubgroupClass& by_label(const std::string& label) const;

  // every concrete subgroup in a class; parallel member/generator vectors
  const std::vector<std::vector<ElemId>>& conjugate_members(int cls) const { return conj_members_[cls]; }
  const std::vector<std::vector<ElemId>>& conjugate_gens(int cls) const { return conj_gens_[cls]; }
  std::size_t total_subgroups() const;

  bool leq(int sub, int super) const { return leq_[sub][super]; } // class-level containment

  std::string export_text() const; // golden-diffable dump

private:
  friend struct LatticeBuilder;

  const FiniteGroup* group_ = nullptr;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<std::vector<ElemId>>> conj_members_;
  std::vector<std::vector<std::vector<ElemId>>> conj_gens_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<bool>> leq_;
  std::map<std::vector<ElemId>, int> member_to_class_;
};

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, std::size_t cap = 2000);

// Rebuilds a lattice from one representative member set per class,
// skipping subgroup discovery.  Conjugate orbits, labels and edges are
// recomputed from scratch; the representative sets are re-closed.  Used by
// the advisory cache.
SubgroupLattice lattice_from_representatives(const FiniteGroup& g,
                                             const std::vector<std::vector<ElemId>>& reps);

// true iff <a, b> is the whole group
bool generates(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

// class of the intersection of two concrete subgroups
int intersection_class(const SubgroupLattice& lat, const Subgroup& a, const Subgroup& b);

// intersection of all subgroups of index <= 2
Subgroup index_two_core(const SubgroupLattice& lat);

} // namespace sphex
