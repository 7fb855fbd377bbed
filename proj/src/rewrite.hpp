#pragma once

#include <cstdint>
#include <vector>

#include "ncpoly.hpp"

namespace qso {

struct RewriteStats {
  std::uint64_t steps = 0;   // reorder-rule applications
  std::uint64_t peak_terms = 0;
};

/// Recursive expansion of a composite generator into basic generators via
/// I^s_{k,l} = u^s I_{l+1,l} I^s_{k,l+1} - u^-s I^s_{k,l+1} I_{l+1,l};
/// a basic generator expands to itself.
NCPoly expand_composite(GenSymbol g);

/// Rewrites the disordered product a*b (both signs +, b strictly below a in
/// the index order) as a combination of strictly deglex-smaller words.
/// Exactly one of six cases applies: shared upper index, chain, shared lower
/// index, disjoint separated, disjoint nested, crossing. Calling it on an
/// ordered pair is a programming bug and throws.
NCPoly reorder_rule(const GenSymbol& a, const GenSymbol& b);

/// Unique PBW normal form over ordered I+ monomials. Minus-signed composite
/// symbols are eliminated by expansion first; then the leftmost disordered
/// adjacent pair is repeatedly reduced. Idempotent.
NCPoly normalize(const NCPoly& p, int n, RewriteStats* stats = nullptr);

/// normalize(p*I_{j+1,j} - I_{j+1,j}*p) for j = 1..n-1; p is central iff all
/// entries are zero.
std::vector<NCPoly> commutator_residuals(const NCPoly& p, int n);

}  // namespace qso
