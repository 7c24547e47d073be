#pragma once

#include <string>
#include <vector>

#include "sphex/cyclo.hpp"
#include "sphex/group.hpp"

namespace sphex {

struct Character {
  std::string name;
  std::vector<CycloNum> values; // one per conjugacy class, class 0 = identity
  bool real_irreducible = false;

  long degree() const;
};

// Multiset of real irreducibles given by multiplicities, index-aligned
// with CharacterTable::real_irreducibles().
struct RGModule {
  std::vector<unsigned> mult;

  bool empty() const;
  unsigned multiplicity(std::size_t i) const { return i < mult.size() ? mult[i] : 0; }
};

// A verified complex character table of a group, together with its
// realification.  Loading re-derives everything checkable: class matching,
// exact row orthogonality, degree sums, power-map and Galois consistency,
// Frobenius-Schur indicators.  A mismatch is an error, not a warning.
class CharacterTable {
public:
  static CharacterTable load_file(const std::string& path, const FiniteGroup& g);
  static CharacterTable load_text(const std::string& text, const FiniteGroup& g);

  const FiniteGroup& group() const { return *group_; }
  const std::string& group_name() const { return group_name_; }
  unsigned exponent() const { return exponent_; }

  const std::vector<Character>& complex_irreducibles() const { return complex_; }
  const std::vector<Character>& real_irreducibles() const { return real_; }
  int real_index(const std::string& name) const;

  // (1/|G|) sum chi(g^2), computed class-wise through the power map
  int frobenius_schur(const Character& chi) const;

  Subgroup kernel(const Character& chi) const;
  const std::vector<ElemId>& real_kernel_members(std::size_t real_idx) const;

  long fp_dim(const Character& chi, const Subgroup& h) const;
  long fp_dim(const RGModule& v, const Subgroup& h) const;
  long fp_dim_real(std::size_t real_idx, const Subgroup& h) const;

  bool is_faithful(const RGModule& v) const;
  long dimension(const RGModule& v) const;
  std::string module_name(const RGModule& v) const; // e.g. "U6+W8_1", "U1^2+W12_2"

  std::string format_real_table() const;

private:
  const FiniteGroup* group_ = nullptr;
  std::string group_name_;
  unsigned exponent_ = 1;
  std::vector<Character> complex_;
  std::vector<Character> real_;
  std::vector<std::vector<ElemId>> real_kernels_;

  void verify(const std::vector<std::pair<unsigned, std::vector<int>>>& powermaps);
  void realify();
};

} // namespace sphex
