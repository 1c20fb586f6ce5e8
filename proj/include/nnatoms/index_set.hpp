#ifndef NNATOMS_INDEX_SET_HPP
#define NNATOMS_INDEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nnatoms {

/// Subset of {0, ..., universe-1} stored as a bitset.
///
/// This is the finite stand-in for a measurable set: on counting measure a
/// set has positive measure exactly when it is nonempty. Binary operations
/// require both operands to share the same universe.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe);

    static IndexSet full(std::size_t universe);
    static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> members);
    static IndexSet of(std::size_t universe, std::span<const std::size_t> members);
    /// Bit i of `mask` selects member i. Requires universe <= 64.
    static IndexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept;

    bool contains(std::size_t i) const;
    void insert(std::size_t i);
    void erase(std::size_t i);

    std::vector<std::size_t> members() const;
    std::optional<std::size_t> first() const;
    std::uint64_t mask() const;

    IndexSet complement() const;
    bool is_subset_of(const IndexSet& other) const;
    bool intersects(const IndexSet& other) const;

    IndexSet& operator|=(const IndexSet& other);
    IndexSet& operator&=(const IndexSet& other);
    /// Set difference.
    IndexSet& operator-=(const IndexSet& other);

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
    friend bool operator==(const IndexSet&, const IndexSet&) = default;

    /// Lexicographic on sorted member lists; used for canonical orderings.
    bool operator<(const IndexSet& other) const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = __builtin_ctzll(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    /// "{0,1,2}" with zero-based members.
    std::string to_string() const;

private:
    void check_same_universe(const IndexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace nnatoms

#endif  // NNATOMS_INDEX_SET_HPP
