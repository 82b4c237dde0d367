#pragma once

#include <utility>
#include <vector>

#include "sd/code.hpp"

namespace sd {

// Families with a shadow: binary, additive F4 (4H+) and Z_m with m even.
bool has_shadow(const Code& c);

// Kernel of the parity functional: weights = 0 mod 4 (binary), even weights (4H+),
// norms = 0 mod 2m (Z_m).  Returns c itself when the functional vanishes.
Code doubly_even_subcode(const Code& c);

// The value the shadow condition asks of (u, v): wt(v)/2 mod 2, wt(v) mod 2 or Norm(v)/2 mod m.
int parity_target(const Code& c, const Vec& v);
// u is in the shadow iff (u, g) = parity_target(g) for every generator g
bool is_parity_vector(const Code& c, const Vec& u);

struct CosetDecomposition {
    Code c0;
    Vec u0, u1, u2, u3;      // C = C0 u (u2+C0), S = (u1+C0) u (u3+C0)
    bool type_ii = false;   // C = C0; then S = C-perp and the u's are zero
};

// Requires a self-dual code.  u1 is the lexicographically least shadow word,
// u2 the least word of C outside C0, u3 = u1 + u2.
CosetDecomposition coset_decomposition(const Code& c, std::uint64_t cap = kDefaultCap);

// Shadow as C0-perp minus C-perp (or C-perp when C = C0), by enumeration.
std::vector<Vec> shadow_by_cosets(const Code& c, std::uint64_t cap = kDefaultCap);
// Shadow as p + C-perp for a solved parity vector p.
std::vector<Vec> shadow_by_parity(const Code& c, std::uint64_t cap = kDefaultCap);
// Both routes, compared; throws PreconditionFailed if they disagree.  Sorted.
std::vector<Vec> shadow_set(const Code& c, std::uint64_t cap = kDefaultCap);

std::pair<Code, Code> neighbors(const Code& c, std::uint64_t cap = kDefaultCap);

}  // namespace sd
