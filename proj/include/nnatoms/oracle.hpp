#ifndef NNATOMS_ORACLE_HPP
#define NNATOMS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nnatoms/index_set.hpp"
#include "nnatoms/rational.hpp"
#include "nnatoms/support_graph.hpp"

namespace nnatoms {

/// Largest state count accepted by the exhaustive enumerations.
inline constexpr std::size_t kEnumerationLimit = 16;

/// Every subset of a small state space, classified by the definitions
/// themselves. Sets are bit masks, listed in increasing mask order.
struct EnumeratedFamilies {
    std::size_t n = 0;
    std::vector<std::uint64_t> invariant;
    std::vector<std::uint64_t> coinvariant;
    std::vector<std::uint64_t> convex;
    std::vector<std::uint64_t> admissible;
    std::vector<std::uint64_t> irreducible;

    std::vector<std::uint64_t> minimal_convex;          // among nonempty convex sets
    std::vector<std::uint64_t> admissible_irreducible;
    std::vector<std::uint64_t> maximal_irreducible;
    std::vector<std::uint64_t> minimal_admissible;      // among nonempty admissible sets
};

/// Classifies all 2^n subsets. Futures and pasts are obtained by iterating
/// the one-step image to a fixed point, admissibility from the sigma-field
/// generated by the enumerated invariant sets, and irreducibility by testing
/// every proper subset for invariance under the restriction.
/// Throws InputError when n exceeds kEnumerationLimit.
EnumeratedFamilies enumerate_families(const SupportGraph& g);

/// Rank by fraction-free (Bareiss) elimination after clearing each row's
/// denominators.
std::size_t exact_rank(const RationalMatrix& m);

/// Algebraic multiplicity n - rank((M - lambda I)^n).
std::size_t exact_multiplicity(const RationalMatrix& m, const Rational& lambda);

/// Support of (I + T)^(n-1) 1_A evaluated with boolean matrix powers.
IndexSet boolean_reachability(const SupportGraph& g, const IndexSet& a);

/// Outcome of the experimental restriction check: for an admissible Ω',
/// is every A ⊆ Ω' T'-admissible exactly when it is T-admissible?
struct RestrictionConjectureCheck {
    bool omega_admissible = false;
    std::size_t subsets_checked = 0;
    std::size_t disagreements = 0;
};

/// Requires n <= kEnumerationLimit. Never throws on a disagreement; it only counts.
RestrictionConjectureCheck check_restriction_conjecture(const SupportGraph& g, const IndexSet& omega);

}  // namespace nnatoms

#endif  // NNATOMS_ORACLE_HPP
