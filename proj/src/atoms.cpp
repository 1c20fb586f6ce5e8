#include "nnatoms/atoms.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "nnatoms/error.hpp"
#include "nnatoms/oracle.hpp"
#include "nnatoms/set_calculus.hpp"

namespace nnatoms {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

// Tarjan's algorithm with an explicit call stack. Returns the component id of
// every vertex; ids are in discovery order, not canonical.
std::vector<std::size_t> tarjan(const SupportGraph& g, std::size_t& component_count) {
    const std::size_t n = g.size();
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t v = 0; v < n; ++v) succ[v] = g.successors(v).members();

    struct Frame {
        std::size_t v;
        std::size_t next_edge;
    };
    std::vector<Frame> calls;
    std::size_t counter = 0;
    component_count = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        calls.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!calls.empty()) {
            Frame& f = calls.back();
            const std::size_t v = f.v;
            if (f.next_edge < succ[v].size()) {
                const std::size_t w = succ[v][f.next_edge++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = component_count;
                } while (w != v);
                ++component_count;
            }
            calls.pop_back();
            if (!calls.empty()) {
                const std::size_t parent = calls.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

AtomPartition find_atoms(const SupportGraph& g) {
    const std::size_t n = g.size();
    std::size_t k = 0;
    const auto comp = tarjan(g, k);

    std::vector<std::size_t> smallest(k, n);
    for (std::size_t v = 0; v < n; ++v) smallest[comp[v]] = std::min(smallest[comp[v]], v);

    std::vector<std::vector<std::size_t>> dag(k);
    std::vector<std::size_t> indegree(k, 0);
    {
        std::vector<IndexSet> seen(k, IndexSet(k));
        for (std::size_t v = 0; v < n; ++v) {
            g.successors(v).for_each([&](std::size_t w) {
                const std::size_t a = comp[v];
                const std::size_t b = comp[w];
                if (a != b && !seen[a].contains(b)) {
                    seen[a].insert(b);
                    dag[a].push_back(b);
                    ++indegree[b];
                }
            });
        }
    }

    // Kahn's algorithm keyed on the smallest member.
    using Key = std::pair<std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (std::size_t c = 0; c < k; ++c) {
        if (indegree[c] == 0) ready.emplace(smallest[c], c);
    }
    std::vector<std::size_t> canonical(k);
    std::size_t next = 0;
    while (!ready.empty()) {
        const std::size_t c = ready.top().second;
        ready.pop();
        canonical[c] = next++;
        for (std::size_t d : dag[c]) {
            if (--indegree[d] == 0) ready.emplace(smallest[d], d);
        }
    }

    AtomPartition p;
    p.atoms.assign(k, IndexSet(n));
    p.atom_of.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        p.atom_of[v] = canonical[comp[v]];
        p.atoms[p.atom_of[v]].insert(v);
    }
    return p;
}

AtomPoset AtomPoset::build(const SupportGraph& g, AtomPartition partition) {
    AtomPoset poset;
    const std::size_t k = partition.size();
    poset.partition_ = std::move(partition);
    const auto& atom_of = poset.partition_.atom_of;

    poset.direct_.assign(k, IndexSet(k));
    for (std::size_t v = 0; v < g.size(); ++v) {
        g.successors(v).for_each([&](std::size_t w) {
            if (atom_of[v] != atom_of[w]) poset.direct_[atom_of[v]].insert(atom_of[w]);
        });
    }
    for (std::size_t a = 0; a < k; ++a) {
        if (auto first = poset.direct_[a].first(); first && *first < a) {
            throw InvariantViolation("atom order", "partition is not in topological order");
        }
    }

    poset.down_.assign(k, IndexSet(k));
    for (std::size_t a = k; a-- > 0;) {
        poset.down_[a].insert(a);
        poset.direct_[a].for_each([&](std::size_t c) { poset.down_[a] |= poset.down_[c]; });
    }
    poset.up_.assign(k, IndexSet(k));
    for (std::size_t a = 0; a < k; ++a) {
        poset.down_[a].for_each([&](std::size_t b) { poset.up_[b].insert(a); });
    }

    for (std::size_t a = 0; a < k; ++a) {
        IndexSet below_direct(k);
        poset.direct_[a].for_each([&](std::size_t s) {
            IndexSet strict = poset.down_[s];
            strict.erase(s);
            below_direct |= strict;
        });
        (poset.direct_[a] - below_direct).for_each([&](std::size_t c) { poset.covers_.emplace_back(a, c); });
    }

    // Spot check of the equivalent descriptions of the order on a few covers.
    const std::size_t spot = std::min<std::size_t>(poset.covers_.size(), 16);
    for (std::size_t c = 0; c < spot; ++c) {
        const auto [upper, lower] = poset.covers_[c];
        const IndexSet& up_atom = poset.partition_.atoms[upper];
        const IndexSet& low_atom = poset.partition_.atoms[lower];
        if (!low_atom.is_subset_of(strict_future(g, up_atom)) || !up_atom.is_subset_of(strict_past(g, low_atom))) {
            throw InvariantViolation("order-strict-future",
                                     "cover " + up_atom.to_string() + " > " + low_atom.to_string() +
                                         " not matched by future/past inclusion");
        }
    }
    return poset;
}

bool is_antichain(const AtomPoset& poset, std::span<const std::size_t> atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            if (poset.leq(atoms[i], atoms[j]) || poset.leq(atoms[j], atoms[i])) return false;
        }
    }
    return true;
}

std::vector<std::size_t> heights(const AtomPoset& poset, const IndexSet& subset) {
    const std::size_t k = poset.size();
    if (subset.universe() != k) throw std::invalid_argument("heights: subset universe must be the atom count");
    std::vector<std::size_t> h(k, 0);
    // Strictly smaller atoms come later in the canonical order.
    for (std::size_t a = k; a-- > 0;) {
        if (!subset.contains(a)) continue;
        std::size_t best = 0;
        (poset.down_set(a) & subset).for_each([&](std::size_t b) {
            if (b != a) best = std::max(best, h[b]);
        });
        h[a] = best + 1;
    }
    return h;
}

std::size_t height(const AtomPoset& poset, const IndexSet& subset, std::size_t atom) {
    if (!subset.contains(atom)) {
        throw InputError("height: atom " + std::to_string(atom) + " is not in the subset");
    }
    return heights(poset, subset)[atom];
}

std::size_t max_chain_length(const AtomPoset& poset, const IndexSet& subset) {
    const auto h = heights(poset, subset);
    const std::size_t top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
    return top == 0 ? 0 : top - 1;
}

std::vector<Cover> covers_within(const AtomPoset& poset, const IndexSet& subset) {
    std::vector<Cover> out;
    subset.for_each([&](std::size_t a) {
        IndexSet below = poset.down_set(a) & subset;
        below.erase(a);
        below.for_each([&](std::size_t b) {
            bool between = false;
            below.for_each([&](std::size_t c) {
                if (c != b && poset.less(b, c)) between = true;
            });
            if (!between) out.emplace_back(a, b);
        });
    });
    return out;
}

AtomCharacterizationReport verify_atom_characterizations(const SupportGraph& g) {
    const auto fam = enumerate_families(g);
    const std::size_t n = g.size();
    auto to_sets = [n](const std::vector<std::uint64_t>& masks) {
        std::vector<IndexSet> sets;
        for (auto m : masks) sets.push_back(IndexSet::from_mask(n, m));
        std::sort(sets.begin(), sets.end());
        return sets;
    };
    AtomCharacterizationReport r;
    r.components = find_atoms(g).atoms;
    std::sort(r.components.begin(), r.components.end());
    r.minimal_convex = to_sets(fam.minimal_convex);
    r.admissible_irreducible = to_sets(fam.admissible_irreducible);
    r.maximal_irreducible = to_sets(fam.maximal_irreducible);
    r.minimal_admissible = to_sets(fam.minimal_admissible);
    r.all_equal = r.components == r.minimal_convex && r.components == r.admissible_irreducible &&
                  r.components == r.maximal_irreducible && r.components == r.minimal_admissible;
    return r;
}

}  // namespace nnatoms
