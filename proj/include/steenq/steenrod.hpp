#pragma once

// Support-based computation of Steenrod squares, its per-simplex direct
// counterpart, and square matrices on cohomology bases.
//
// The support routine builds every candidate union of two distinct support
// simplices and keeps the ones the index filter accepts; it never touches
// simplices of X unrelated to the support. The direct routine walks all of
// X in the target dimension and shares no code with the filter, so the two
// check each other.

#include "steenq/cupi.hpp"
#include "steenq/f2linear.hpp"
#include "steenq/simplicial.hpp"

namespace steenq {

/// 1-based rank of v within the ascending sequence S. Throws when absent.
int position(const std::vector<VertexId>& S, VertexId v);

/// Support of (a (x) a) applied to the cup-(n-k) coproduct, computed from the
/// support A of a alone: for every unordered pair of distinct members whose
/// union is an (n+k)-simplex of X, the union is toggled into the result when
/// the index filter ind(a_i \ a_j) xor ind(a_j \ a_i) = {0,1} accepts it.
/// Valid for any support set, cocycle or not. Requires 1 <= k <= n.
SimplexSet sq_support(const SimplexSet& A, int n, int k, const SimplicialComplex& X);

/// The k-th Steenrod square on cochains via the support routine:
/// zero when k < 0 or k > degree, the identity when k = 0.
Cochain sq_cochain(const Cochain& a, int k, const SimplicialComplex& X);

/// Direct evaluation: includes x in the result iff (a (x) a) pairs to 1
/// against the cup-(n-k) coproduct of x, for every x of the target dimension.
/// Agrees with sq_cochain everywhere; used as the independent baseline.
Cochain sq_direct_oracle(const Cochain& a, int k, const SimplicialComplex& X);

/// Coordinates of Sq^k applied to a basis class, k = target.degree -
/// source.degree. The result is verified to be a cocycle before its class is
/// read off; a failure there would contradict the coboundary relation and
/// raises internal_error.
F2Vector sq_class(const SimplicialComplex& X, const CohomologySpace& source,
                  const CohomologySpace& target, std::size_t class_index);

/// Matrix of Sq^k : H^n -> H^{n+k} (rows: target basis, cols: source basis).
F2Matrix sq_matrix(const SimplicialComplex& X, int n, int k);

}  // namespace steenq
