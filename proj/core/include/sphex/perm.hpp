#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sphex/error.hpp"

namespace sphex {

using Point = std::uint16_t;

// Permutation of {0, ..., degree-1}, stored as its image array.
// Composition is function composition: (a*b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(unsigned degree);

  // Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
  // The identity is "()".  Fixed points are omitted.
  static Permutation parse_cycles(const std::string& text, unsigned degree);
  std::string to_cycles() const;

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  unsigned order() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Group file format: `degree N` on the first line, then one generator
// per line in disjoint-cycle notation; `#` starts a comment.
struct GroupFile {
  unsigned degree = 0;
  std::vector<Permutation> generators;
};

GroupFile read_group_file(const std::string& path);
GroupFile parse_group_file(const std::string& text);
std::string write_group_file(const GroupFile& gf);

} // namespace sphex
