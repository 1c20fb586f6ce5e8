#include "nnatoms/periodicity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "nnatoms/error.hpp"
#include "nnatoms/set_calculus.hpp"

namespace nnatoms {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

// BFS levels from the smallest node of the atom, along edges inside it.
std::vector<std::size_t> levels(const SupportGraph& g, const IndexSet& atom) {
    std::vector<std::size_t> level(g.size(), kUnseen);
    const std::size_t root = *atom.first();
    level[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        (g.successors(u) & atom).for_each([&](std::size_t v) {
            if (level[v] == kUnseen) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return level;
}

void require_atom(const SupportGraph& g, const IndexSet& atom) {
    if (atom.universe() != g.size() || atom.empty()) throw InputError("atom must be a nonempty subset of the states");
    if (!is_irreducible(g, atom)) throw InputError("set " + atom.to_string() + " is not irreducible");
}

}  // namespace

std::size_t period(const SupportGraph& g, const IndexSet& atom) {
    require_atom(g, atom);
    const auto level = levels(g, atom);
    std::size_t p = 0;
    atom.for_each([&](std::size_t u) {
        (g.successors(u) & atom).for_each([&](std::size_t v) {
            // level(v) <= level(u) + 1 for every BFS tree, so this is >= 0.
            p = std::gcd(p, level[u] + 1 - level[v]);
        });
    });
    if (p == 0) throw InputError("atom " + atom.to_string() + " has no internal edge (zero atom)");
    return p;
}

CyclicDecomposition cyclic_classes(const SupportGraph& g, const IndexSet& atom, std::size_t n) {
    if (n == 0) throw InputError("power must be at least 1");
    const std::size_t p = period(g, atom);
    CyclicDecomposition cd;
    cd.base = atom;
    cd.power = n;
    cd.d = std::gcd(p, n);

    const auto level = levels(g, atom);
    IndexSet a0(g.size());
    atom.for_each([&](std::size_t v) {
        if (level[v] % cd.d == 0) a0.insert(v);
    });
    cd.classes.push_back(a0);
    for (std::size_t k = 1; k < cd.d; ++k) cd.classes.push_back(image(g, cd.classes.back()) & atom);

    if (n % cd.d != 0) throw InvariantViolation("cyclic-divisor", "d does not divide n");
    IndexSet covered(g.size());
    for (const auto& c : cd.classes) {
        if (c.empty() || covered.intersects(c)) {
            throw InvariantViolation("cyclic-partition", "classes of " + atom.to_string() + " are not a partition");
        }
        covered |= c;
    }
    if (covered != atom) throw InvariantViolation("cyclic-partition", "classes do not cover " + atom.to_string());
    for (std::size_t k = 0; k < cd.d; ++k) {
        if ((image(g, cd.classes[k]) & atom) != cd.classes[(k + 1) % cd.d]) {
            throw InvariantViolation("cyclic-shift", "image of class " + std::to_string(k) + " is not the next class");
        }
    }
    const auto power_atoms = find_atoms(g.power(n));
    for (const auto& c : cd.classes) {
        if (power_atoms.atoms[power_atoms.atom_of[*c.first()]] != c) {
            throw InvariantViolation("power-atoms", "class " + c.to_string() + " is not an atom of the power " +
                                                        std::to_string(n));
        }
    }
    return cd;
}

std::size_t n_A(const SupportGraph& g, const IndexSet& a) {
    if (a.universe() != g.size() || a.empty()) throw InputError("n_A needs a nonempty subset of the states");
    const IndexSet all = IndexSet::full(g.size());
    if (g.edge_count() == 0 || !is_irreducible(g, all)) throw InputError("n_A needs an irreducible nonzero matrix");
    IndexSet reached = a;
    IndexSet frontier = a;
    for (std::size_t m = 1; m <= g.size(); ++m) {
        if (reached == all) return m;
        frontier = image(g, frontier);
        reached |= frontier;
    }
    throw InvariantViolation("n_A-bound", "union of images did not reach the state space within n steps");
}

AtomPartition power_matrix_atoms(const SupportGraph& g, std::size_t n) {
    if (n == 0) throw InputError("power must be at least 1");
    auto partition = find_atoms(g.power(n));
    const auto base = find_atoms(g);
    for (const auto& atom : partition.atoms) {
        if (!atom.is_subset_of(base.atoms[base.atom_of[*atom.first()]])) {
            throw InvariantViolation("power-atom-inclusion", atom.to_string() + " is not inside an atom of T");
        }
    }
    return partition;
}

}  // namespace nnatoms
