#include "nnatoms/index_set.hpp"

#include <stdexcept>

namespace nnatoms {

namespace {
constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}  // namespace

IndexSet::IndexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

IndexSet IndexSet::full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

IndexSet IndexSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
    return of(universe, std::span<const std::size_t>(members.begin(), members.size()));
}

IndexSet IndexSet::of(std::size_t universe, std::span<const std::size_t> members) {
    IndexSet s(universe);
    for (auto i : members) s.insert(i);
    return s;
}

IndexSet IndexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("IndexSet::from_mask: universe exceeds 64");
    if (universe < 64 && (mask >> universe) != 0) {
        throw std::invalid_argument("IndexSet::from_mask: mask has bits outside the universe");
    }
    IndexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

std::size_t IndexSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool IndexSet::empty() const noexcept {
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

bool IndexSet::contains(std::size_t i) const {
    if (i >= universe_) return false;
    return (words_[i / 64] >> (i % 64)) & 1U;
}

void IndexSet::insert(std::size_t i) {
    if (i >= universe_) {
        throw std::out_of_range("IndexSet::insert: index " + std::to_string(i) +
                                " outside universe of size " + std::to_string(universe_));
    }
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void IndexSet::erase(std::size_t i) {
    if (i >= universe_) return;
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::vector<std::size_t> IndexSet::members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::optional<std::size_t> IndexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
    }
    return std::nullopt;
}

std::uint64_t IndexSet::mask() const {
    if (universe_ > 64) throw std::invalid_argument("IndexSet::mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
}

IndexSet IndexSet::complement() const { return full(universe_) - *this; }

bool IndexSet::is_subset_of(const IndexSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

bool IndexSet::operator<(const IndexSet& other) const {
    const auto a = members();
    const auto b = other.members();
    return a < b;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](std::size_t i) {
        if (!first_member) s += ',';
        s += std::to_string(i);
        first_member = false;
    });
    s += '}';
    return s;
}

void IndexSet::check_same_universe(const IndexSet& other) const {
    if (universe_ != other.universe_) {
        throw std::invalid_argument("IndexSet: universe mismatch (" + std::to_string(universe_) +
                                    " vs " + std::to_string(other.universe_) + ")");
    }
}

}  // namespace nnatoms
