#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sphex/lattice.hpp"

namespace sphex {

// 64-bit FNV-1a; stable across runs, used to key cache entries by input
// file content
std::uint64_t content_hash(const std::string& bytes);

// Advisory on-disk cache for computed subgroup lattices.  Entries are
// keyed by the content hash of the group input; loads are verified
// (representatives re-closed, orbit sizes recomputed) and fall back to a
// fresh enumeration on any mismatch.
class LatticeCache {
public:
  // dir empty = disabled; SPHEX_CACHE_DIR overrides when set
  explicit LatticeCache(std::string dir);

  std::optional<SubgroupLattice> load(const FiniteGroup& g, std::uint64_t key) const;
  void store(const SubgroupLattice& lat, std::uint64_t key) const;

  const std::string& dir() const { return dir_; }

private:
  std::string dir_;
};

// enumerate_subgroups with cache consultation
SubgroupLattice cached_lattice(const FiniteGroup& g, std::uint64_t key, const LatticeCache& cache,
                               std::size_t cap = 2000);

} // namespace sphex
