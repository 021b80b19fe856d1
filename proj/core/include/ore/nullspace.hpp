#ifndef ORE_NULLSPACE_HPP
#define ORE_NULLSPACE_HPP

#include <vector>

#include "ore/rational.hpp"

namespace ore {

using MatQ = std::vector<std::vector<Rational>>;
using VecZ = std::vector<Integer>;

/// Basis of the right nullspace of a rectangular rational matrix, computed
/// exactly.  Each basis vector is scaled to integer entries with content 1
/// and first nonzero entry positive.  Empty result iff full column rank.
///
/// Small systems run fraction-free (Bareiss) elimination over the integers.
/// Large systems take a modular shortcut whose output is certified: every
/// returned vector is verified against the exact matrix, and the dimension
/// argument (rank mod p <= exact rank) makes the certificate two-sided.
std::vector<VecZ> nullspace(const MatQ& m, std::size_t cols);

} // namespace ore

#endif
