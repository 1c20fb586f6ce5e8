#include "nnatoms/support_graph.hpp"

#include <stdexcept>

namespace nnatoms {

SupportGraph::SupportGraph(std::size_t n) : successors_(n, IndexSet(n)), predecessors_(n, IndexSet(n)) {}

SupportGraph SupportGraph::from_matrix(const NonnegativeMatrix& matrix, double relative_threshold) {
    const std::size_t n = matrix.size();
    SupportGraph g(n);
    if (matrix.is_exact()) {
        const auto& e = matrix.exact();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (e(i, j) != 0) g.add_edge(j, i);
            }
        }
        return g;
    }
    const double cut = relative_threshold * matrix.max_entry();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (matrix(i, j) > cut) g.add_edge(j, i);
        }
    }
    return g;
}

SupportGraph SupportGraph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    SupportGraph g(n);
    for (auto [from, to] : edges) g.add_edge(from, to);
    return g;
}

std::size_t SupportGraph::edge_count() const noexcept {
    std::size_t c = 0;
    for (const auto& s : successors_) c += s.count();
    return c;
}

void SupportGraph::add_edge(std::size_t from, std::size_t to) {
    if (from >= size() || to >= size()) throw std::out_of_range("SupportGraph::add_edge: vertex out of range");
    successors_[from].insert(to);
    predecessors_[to].insert(from);
}

SupportGraph SupportGraph::transposed() const {
    SupportGraph t;
    t.successors_ = predecessors_;
    t.predecessors_ = successors_;
    return t;
}

SupportGraph SupportGraph::restricted(const IndexSet& keep) const {
    if (keep.universe() != size()) throw std::invalid_argument("SupportGraph::restricted: universe mismatch");
    SupportGraph r(size());
    keep.for_each([&](std::size_t j) {
        r.successors_[j] = successors_[j] & keep;
        r.predecessors_[j] = predecessors_[j] & keep;
    });
    return r;
}

SupportGraph SupportGraph::power(unsigned exponent) const {
    const std::size_t n = size();
    SupportGraph result(n);
    for (std::size_t i = 0; i < n; ++i) result.add_edge(i, i);
    SupportGraph base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = compose(result, base);
        exponent >>= 1U;
        if (exponent > 0) base = compose(base, base);
    }
    return result;
}

SupportGraph compose(const SupportGraph& first, const SupportGraph& second) {
    if (first.size() != second.size()) throw std::invalid_argument("compose: size mismatch");
    const std::size_t n = first.size();
    SupportGraph out(n);
    for (std::size_t j = 0; j < n; ++j) {
        IndexSet reach(n);
        first.successors(j).for_each([&](std::size_t k) { reach |= second.successors(k); });
        reach.for_each([&](std::size_t i) { out.add_edge(j, i); });
    }
    return out;
}

}  // namespace nnatoms
