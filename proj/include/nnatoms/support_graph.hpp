#ifndef NNATOMS_SUPPORT_GRAPH_HPP
#define NNATOMS_SUPPORT_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nnatoms/index_set.hpp"
#include "nnatoms/matrix.hpp"

namespace nnatoms {

/// Default relative threshold below which float entries are structural zeros.
inline constexpr double kDefaultSupportThreshold = 1e-12;

/// Directed graph of the support of a nonnegative matrix: edge j -> i iff
/// T[i][j] > 0. Float matrices drop entries <= threshold * max_entry; exact
/// matrices keep every nonzero rational.
class SupportGraph {
public:
    SupportGraph() = default;
    explicit SupportGraph(std::size_t n);

    static SupportGraph from_matrix(const NonnegativeMatrix& matrix,
                                    double relative_threshold = kDefaultSupportThreshold);
    /// Edges are (from, to) pairs.
    static SupportGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const noexcept { return successors_.size(); }
    std::size_t edge_count() const noexcept;

    void add_edge(std::size_t from, std::size_t to);
    bool has_edge(std::size_t from, std::size_t to) const { return successors_[from].contains(to); }

    /// States reached in one step from j (the support of column j).
    const IndexSet& successors(std::size_t j) const { return successors_[j]; }
    /// States feeding i in one step (the support of row i).
    const IndexSet& predecessors(std::size_t i) const { return predecessors_[i]; }

    SupportGraph transposed() const;
    /// Drops every edge with an endpoint outside `keep`.
    SupportGraph restricted(const IndexSet& keep) const;
    /// Support of the n-th power (walks of length exactly n); power 0 is the identity.
    SupportGraph power(unsigned exponent) const;

    friend bool operator==(const SupportGraph&, const SupportGraph&) = default;

private:
    std::vector<IndexSet> successors_;
    std::vector<IndexSet> predecessors_;
};

/// Boolean product: edge j -> i in the result iff a walk j -> k in `first`
/// followed by k -> i in `second` exists.
SupportGraph compose(const SupportGraph& first, const SupportGraph& second);

}  // namespace nnatoms

#endif  // NNATOMS_SUPPORT_GRAPH_HPP
