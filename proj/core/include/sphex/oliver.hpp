#pragma once

#include <optional>
#include <vector>

#include "sphex/lattice.hpp"

namespace sphex {

// Witness chain P <| H <| K with |P| and [K:H] of prime power order and
// H/P cyclic.  Member ids refer to the ambient group.
struct OliverChain {
  std::vector<ElemId> p_members;
  std::vector<ElemId> h_members;
};

struct OliverVerdict {
  bool is_oliver = false;
  std::optional<OliverChain> witness; // present iff not Oliver
};

bool is_prime_power(std::size_t n); // 1 counts as a prime power

// Exhaustive chain scan for the subgroup K of the lattice's group.  The
// lattice must belong to the same group and supplies the subgroup store.
OliverVerdict oliver_verdict(const SubgroupLattice& lat, const Subgroup& k);

// Re-verifies a witness chain from raw group operations only; shares no
// code with the scan above.
bool verify_oliver_chain(const FiniteGroup& g, const std::vector<ElemId>& k_members, const OliverChain& chain);

} // namespace sphex
