#ifndef NNATOMS_PERIODICITY_HPP
#define NNATOMS_PERIODICITY_HPP

#include <cstddef>
#include <vector>

#include "nnatoms/atoms.hpp"
#include "nnatoms/index_set.hpp"
#include "nnatoms/support_graph.hpp"

namespace nnatoms {

/// gcd of closed-walk lengths inside an atom. InputError when the atom has
/// no internal edge.
std::size_t period(const SupportGraph& g, const IndexSet& atom);

/// Splitting of a T-atom B into the T^n-atoms it contains.
struct CyclicDecomposition {
    IndexSet base;
    std::size_t power = 1;
    std::size_t d = 1;
    /// classes[k] = image^k(classes[0]) ∩ B; classes[0] holds the smallest node of B.
    std::vector<IndexSet> classes;
};

/// d = gcd(period(B), n) classes. Each class is checked against the atoms of
/// the n-th boolean power, and the classes against their cyclic shift;
/// failures raise InvariantViolation.
CyclicDecomposition cyclic_classes(const SupportGraph& g, const IndexSet& atom, std::size_t n);

/// Least m with A ∪ image(A) ∪ ... ∪ image^(m-1)(A) = Ω. Requires g strongly
/// connected with at least one edge, and A nonempty.
std::size_t n_A(const SupportGraph& g, const IndexSet& a);

/// Atoms of the n-th boolean power, each checked to lie inside a T-atom.
AtomPartition power_matrix_atoms(const SupportGraph& g, std::size_t n);

}  // namespace nnatoms

#endif  // NNATOMS_PERIODICITY_HPP
