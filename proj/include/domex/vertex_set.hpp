#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace domex {

// Bitset over vertex indices [0, 64).
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    // {0, ..., n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int front() const { return std::countr_zero(bits_); }
    constexpr int back() const { return 63 - std::countl_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    std::string to_string() const;  // "{0,2,5}"

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    // Ordered by raw bit value.
    constexpr auto operator<=>(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

}  // namespace domex

template <>
struct std::hash<domex::VertexSet> {
    std::size_t operator()(domex::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
