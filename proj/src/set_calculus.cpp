#include "nnatoms/set_calculus.hpp"

#include <stdexcept>
#include <vector>

#include "nnatoms/atoms.hpp"
#include "nnatoms/error.hpp"

namespace nnatoms {

namespace {

void check_universe(const SupportGraph& g, const IndexSet& a) {
    if (a.universe() != g.size()) {
        throw std::invalid_argument("set of universe " + std::to_string(a.universe()) +
                                    " used with a graph on " + std::to_string(g.size()) + " states");
    }
}

// Forward (or backward) closure by breadth-first search from every member of `a`.
IndexSet closure(const SupportGraph& g, const IndexSet& a, bool forward) {
    check_universe(g, a);
    IndexSet seen = a;
    std::vector<std::size_t> queue = a.members();
    while (!queue.empty()) {
        const std::size_t v = queue.back();
        queue.pop_back();
        const IndexSet& next = forward ? g.successors(v) : g.predecessors(v);
        next.for_each([&](std::size_t w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
        });
    }
    return seen;
}

// Closure inside `within` only.
IndexSet induced_closure(const SupportGraph& g, std::size_t start, const IndexSet& within, bool forward) {
    IndexSet seen(g.size());
    seen.insert(start);
    std::vector<std::size_t> queue{start};
    while (!queue.empty()) {
        const std::size_t v = queue.back();
        queue.pop_back();
        const IndexSet next = (forward ? g.successors(v) : g.predecessors(v)) & within;
        next.for_each([&](std::size_t w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
        });
    }
    return seen;
}

}  // namespace

IndexSet image(const SupportGraph& g, const IndexSet& a) {
    check_universe(g, a);
    IndexSet out(g.size());
    a.for_each([&](std::size_t j) { out |= g.successors(j); });
    return out;
}

IndexSet preimage(const SupportGraph& g, const IndexSet& a) {
    check_universe(g, a);
    IndexSet out(g.size());
    a.for_each([&](std::size_t i) { out |= g.predecessors(i); });
    return out;
}

IndexSet future(const SupportGraph& g, const IndexSet& a) { return closure(g, a, true); }

IndexSet past(const SupportGraph& g, const IndexSet& a) { return closure(g, a, false); }

IndexSet strict_future(const SupportGraph& g, const IndexSet& a) { return future(g, a) - a; }

IndexSet strict_past(const SupportGraph& g, const IndexSet& a) { return past(g, a) - a; }

bool is_invariant(const SupportGraph& g, const IndexSet& a) { return image(g, a).is_subset_of(a); }

bool is_coinvariant(const SupportGraph& g, const IndexSet& a) { return preimage(g, a).is_subset_of(a); }

bool is_convex(const SupportGraph& g, const IndexSet& a) { return (future(g, a) & past(g, a)) == a; }

bool is_admissible(const AtomPartition& partition, const IndexSet& a) {
    if (a.universe() != partition.atom_of.size()) throw std::invalid_argument("is_admissible: universe mismatch");
    for (const auto& atom : partition.atoms) {
        if (atom.intersects(a) && !atom.is_subset_of(a)) return false;
    }
    return true;
}

bool is_admissible(const SupportGraph& g, const IndexSet& a) { return is_admissible(find_atoms(g), a); }

bool is_irreducible(const SupportGraph& g, const IndexSet& a) {
    check_universe(g, a);
    const auto start = a.first();
    if (!start) return false;
    return induced_closure(g, *start, a, true) == a && induced_closure(g, *start, a, false) == a;
}

SupportGraph restrict(const SupportGraph& g, const IndexSet& omega) {
    check_universe(g, omega);
    if (omega.empty()) throw InputError("restriction to an empty set");
    return g.restricted(omega);
}

NonnegativeMatrix restrict(const NonnegativeMatrix& t, const IndexSet& omega) {
    if (omega.universe() != t.size()) throw std::invalid_argument("restrict: universe mismatch");
    if (omega.empty()) throw InputError("restriction to an empty set");
    return t.restricted(omega);
}

}  // namespace nnatoms
