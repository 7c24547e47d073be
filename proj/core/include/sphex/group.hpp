#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sphex/perm.hpp"

namespace sphex {

using ElemId = std::uint32_t;

struct ConjugacyClass {
  ElemId representative = 0; // member whose permutation is lexicographically minimal
  std::vector<ElemId> members;
  unsigned order_of_rep = 1;
  std::string label; // representative order plus a capital letter when tied
  std::size_t size() const { return members.size(); }
};

// A finite permutation group with a canonical element enumeration
// (breadth-first over generator words, identity first).  Immutable after
// construction; all queries are pure.
class FiniteGroup {
public:
  static constexpr std::size_t kDefaultCap = 10000;
  static constexpr std::size_t kCayleyMax = 1024;

  FiniteGroup(std::vector<Permutation> generators, std::size_t cap, std::string name);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::size_t order() const { return elems_.size(); }
  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::vector<ElemId> generator_ids() const;

  const Permutation& perm(ElemId id) const { return elems_[id]; }
  ElemId id_of(const Permutation& p) const;
  ElemId identity() const { return 0; }

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId conj(ElemId g, ElemId t) const { return mul(mul(inv(t), g), t); } // t^-1 g t
  ElemId power(ElemId g, long long e) const;
  unsigned element_order(ElemId a) const { return elem_order_[a]; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(ElemId a) const { return class_of_[a]; }
  const ConjugacyClass* class_by_label(const std::string& label) const;

  // class index of the p-th powers of class c members
  int power_class(unsigned p, int c) const;

  std::vector<ElemId> center() const;
  std::vector<ElemId> derived_subgroup_members() const;
  bool is_abelian() const;
  unsigned exponent() const;

private:
  std::string name_;
  unsigned degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, ElemId, PermutationHash> index_;
  std::vector<ElemId> inverse_;
  std::vector<unsigned> elem_order_;
  std::vector<std::uint16_t> cayley_; // empty above kCayleyMax
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;

  void build_classes();
};

FiniteGroup generate_group(std::vector<Permutation> gens, std::size_t cap = FiniteGroup::kDefaultCap,
                           std::string name = "");
FiniteGroup group_from_file(const std::string& path, std::size_t cap = FiniteGroup::kDefaultCap,
                            std::string name = "");

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<ElemId> members; // sorted
  std::vector<ElemId> gens;

  std::size_t order() const { return members.size(); }
  bool contains(ElemId e) const;
  bool is_whole_group() const { return members.size() == parent->order(); }
};

// smallest subgroup containing the seed; gens is a small generating subset
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<ElemId>& seed);
// closure as a plain sorted member vector (no generating-set bookkeeping)
std::vector<ElemId> closure_members(const FiniteGroup& g, const std::vector<ElemId>& seed);

Subgroup make_subgroup(const FiniteGroup& g, std::vector<ElemId> members); // validates closure + Lagrange
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

std::map<unsigned, std::size_t> element_order_histogram(const Subgroup& h);
bool is_normal_in(const Subgroup& h, const Subgroup& k); // h normal in k (h <= k assumed)
std::vector<ElemId> conjugate_members(const FiniteGroup& g, const std::vector<ElemId>& members, ElemId t);
std::vector<ElemId> intersect_members(const std::vector<ElemId>& a, const std::vector<ElemId>& b);
bool subset_of(const std::vector<ElemId>& a, const std::vector<ElemId>& b);

struct QuotientGroup {
  const FiniteGroup* parent = nullptr;
  Subgroup normal_subgroup;
  std::vector<std::vector<ElemId>> cosets; // cosets[0] is the normal subgroup
  std::vector<int> coset_of;               // element id -> coset index
  std::vector<std::vector<int>> product;   // coset product table

  std::size_t order() const { return cosets.size(); }
  // left-multiplication action on cosets; element p of the result
  // corresponds to the coset p[0]
  FiniteGroup to_group() const;
};

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

// Isomorphism by invariant fingerprint fast-reject then generator-image
// backtracking.  Requires min(|A|,|B|) <= 256.  On success the witness (if
// requested) maps element ids of a to element ids of b.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::vector<ElemId>* witness = nullptr);

std::uint64_t iso_fingerprint(const FiniteGroup& g);

} // namespace sphex
