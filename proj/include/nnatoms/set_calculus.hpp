#ifndef NNATOMS_SET_CALCULUS_HPP
#define NNATOMS_SET_CALCULUS_HPP

#include "nnatoms/index_set.hpp"
#include "nnatoms/matrix.hpp"
#include "nnatoms/support_graph.hpp"

namespace nnatoms {

struct AtomPartition;

// Set-level calculus on a support graph. All functions are pure; sets must
// live in the graph's universe.

/// T(A) = { i : some j in A has an edge j -> i }.
IndexSet image(const SupportGraph& g, const IndexSet& a);
/// T*(A), the image under the transposed graph.
IndexSet preimage(const SupportGraph& g, const IndexSet& a);

/// F(A): states reachable from A, A included. The smallest invariant superset.
IndexSet future(const SupportGraph& g, const IndexSet& a);
/// P(A): states that reach A, A included. The smallest co-invariant superset.
IndexSet past(const SupportGraph& g, const IndexSet& a);
/// F*(A) = F(A) \ A.
IndexSet strict_future(const SupportGraph& g, const IndexSet& a);
/// P*(A) = P(A) \ A.
IndexSet strict_past(const SupportGraph& g, const IndexSet& a);

/// No edge leaves A.
bool is_invariant(const SupportGraph& g, const IndexSet& a);
/// No edge enters A.
bool is_coinvariant(const SupportGraph& g, const IndexSet& a);
/// A = F(A) ∩ P(A).
bool is_convex(const SupportGraph& g, const IndexSet& a);
/// A is a union of atoms of `partition`.
bool is_admissible(const AtomPartition& partition, const IndexSet& a);
/// Same, computing the atoms of `g` first.
bool is_admissible(const SupportGraph& g, const IndexSet& a);
/// Nonempty and strongly connected as an induced subgraph. A singleton
/// counts as strongly connected with or without a self-loop.
bool is_irreducible(const SupportGraph& g, const IndexSet& a);

/// Graph of T_{Ω'}: edges touching the complement of Ω' are dropped.
/// Throws InputError when Ω' is empty.
SupportGraph restrict(const SupportGraph& g, const IndexSet& omega);
/// Matrix T_{Ω'} = M_{Ω'} T M_{Ω'}. Throws InputError when Ω' is empty.
NonnegativeMatrix restrict(const NonnegativeMatrix& t, const IndexSet& omega);

}  // namespace nnatoms

#endif  // NNATOMS_SET_CALCULUS_HPP
