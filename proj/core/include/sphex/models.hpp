#pragma once

#include <optional>
#include <string>

#include "sphex/group.hpp"

namespace sphex {
namespace models {

// Reference constructions of the named groups appearing as subgroup-class
// labels.  All are permutation groups; degrees are whatever is convenient.
FiniteGroup cyclic(unsigned n);
FiniteGroup klein_four();
FiniteGroup dihedral(unsigned n);     // order 2n, n >= 3
FiniteGroup dicyclic(unsigned n);     // order 4n, n >= 2; Q8 = dicyclic(2)
FiniteGroup symmetric(unsigned n);    // natural degree n
FiniteGroup alternating(unsigned n);  // n in {4, 5}
FiniteGroup frobenius20();            // C5 : C4, degree 5
FiniteGroup c5_rtimes_c8();           // C5 : C8 acting through C4
FiniteGroup sl2(unsigned q);          // q in {3, 5}, on nonzero vectors of Fq^2
FiniteGroup binary_octahedral();      // SL(2,3).C2 non-split, order 48

// Matches a group against the model zoo and returns the display name used
// in subgroup-lattice labels (e.g. "Q8", "[24,4]", "SL(2,3)").
std::optional<std::string> recognize(const FiniteGroup& g);

} // namespace models
} // namespace sphex
