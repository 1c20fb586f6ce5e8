#ifndef NNATOMS_ATOMS_HPP
#define NNATOMS_ATOMS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nnatoms/index_set.hpp"
#include "nnatoms/support_graph.hpp"

namespace nnatoms {

/// Atoms are the strongly connected components of the support graph.
///
/// Canonical order: topological along edges (an atom comes before every atom
/// in its strict future), ties broken by smallest member.
struct AtomPartition {
    std::vector<IndexSet> atoms;
    /// atom_of[v] is the index in `atoms` of the atom containing state v.
    std::vector<std::size_t> atom_of;

    std::size_t size() const noexcept { return atoms.size(); }
};

/// Iterative Tarjan followed by the canonical reordering.
AtomPartition find_atoms(const SupportGraph& g);

/// Pair (upper, lower) of atom indices where `upper` covers `lower`.
using Cover = std::pair<std::size_t, std::size_t>;

/// The order B ⪯ A iff B ⊆ F(A) on the atoms of a graph, with its covers.
class AtomPoset {
public:
    AtomPoset() = default;
    static AtomPoset build(const SupportGraph& g, AtomPartition partition);
    static AtomPoset build(const SupportGraph& g) { return build(g, find_atoms(g)); }

    const AtomPartition& partition() const noexcept { return partition_; }
    std::size_t size() const noexcept { return partition_.size(); }
    const IndexSet& atom(std::size_t a) const { return partition_.atoms[a]; }

    /// b ⪯ a.
    bool leq(std::size_t b, std::size_t a) const { return down_[a].contains(b); }
    /// b ≺ a.
    bool less(std::size_t b, std::size_t a) const { return b != a && leq(b, a); }

    /// Atom indices below or equal to a.
    const IndexSet& down_set(std::size_t a) const { return down_[a]; }
    /// Atom indices above or equal to a.
    const IndexSet& up_set(std::size_t a) const { return up_[a]; }
    /// Transitive reduction of ≺, sorted.
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    /// Atoms reached by a single edge from a (condensation successors).
    const IndexSet& direct_successors(std::size_t a) const { return direct_[a]; }

private:
    AtomPartition partition_;
    std::vector<IndexSet> down_;
    std::vector<IndexSet> up_;
    std::vector<IndexSet> direct_;
    std::vector<Cover> covers_;
};

/// No two listed atoms are comparable.
bool is_antichain(const AtomPoset& poset, std::span<const std::size_t> atoms);

/// Heights inside `subset` (a set over atom indices): h(A) = 1 + the longest
/// chain A = A_0 ≻ A_1 ≻ ... ≻ A_k with every A_i in subset. Atoms outside
/// the subset get 0.
std::vector<std::size_t> heights(const AtomPoset& poset, const IndexSet& subset);
/// Throws InputError when `atom` is not in `subset`.
std::size_t height(const AtomPoset& poset, const IndexSet& subset, std::size_t atom);
/// Length (number of ≻ steps) of the longest chain inside `subset`.
std::size_t max_chain_length(const AtomPoset& poset, const IndexSet& subset);
/// Covers of the order restricted to `subset`.
std::vector<Cover> covers_within(const AtomPoset& poset, const IndexSet& subset);

/// The four descriptions of atoms, each obtained by exhaustive enumeration,
/// next to the strongly connected components.
struct AtomCharacterizationReport {
    std::vector<IndexSet> components;
    std::vector<IndexSet> minimal_convex;
    std::vector<IndexSet> admissible_irreducible;
    std::vector<IndexSet> maximal_irreducible;
    std::vector<IndexSet> minimal_admissible;
    bool all_equal = false;
};

/// Requires at most 16 states (InputError otherwise).
AtomCharacterizationReport verify_atom_characterizations(const SupportGraph& g);

}  // namespace nnatoms

#endif  // NNATOMS_ATOMS_HPP
