#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace zkmorse {

inline constexpr int kMaxGroundSet = 24;

/// A subset of the ground set [m] = {1,...,m}, stored as a bitmask.
/// Vertex v occupies bit v-1. The ambient m is implied by context.
class FaceSet {
public:
    constexpr FaceSet() = default;
    explicit constexpr FaceSet(std::uint32_t bits) : bits_(bits) {}

    FaceSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static FaceSet from_vertices(const std::vector<int>& vertices) {
        FaceSet f;
        for (int v : vertices) f.insert(v);
        return f;
    }

    static constexpr FaceSet full(int m) {
        return FaceSet((m == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1));
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
    constexpr bool subset_of(FaceSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(FaceSet other) const { return (bits_ & other.bits_) != 0; }

    void insert(int v) {
        if (v < 1 || v > 32) throw std::invalid_argument("FaceSet vertex out of range");
        bits_ |= std::uint32_t{1} << (v - 1);
    }
    void erase(int v) { bits_ &= ~(std::uint32_t{1} << (v - 1)); }

    constexpr FaceSet with(int v) const { return FaceSet(bits_ | (std::uint32_t{1} << (v - 1))); }
    constexpr FaceSet without(int v) const { return FaceSet(bits_ & ~(std::uint32_t{1} << (v - 1))); }

    constexpr FaceSet operator|(FaceSet o) const { return FaceSet(bits_ | o.bits_); }
    constexpr FaceSet operator&(FaceSet o) const { return FaceSet(bits_ & o.bits_); }
    constexpr FaceSet operator-(FaceSet o) const { return FaceSet(bits_ & ~o.bits_); }

    /// Complement within [m].
    constexpr FaceSet complement(int m) const { return FaceSet(~bits_ & full(m).bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint32_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    /// Relabel after dropping vertex v: vertices above v shift down by one.
    FaceSet drop_and_shift(int v) const {
        std::uint32_t lo_mask = (std::uint32_t{1} << (v - 1)) - 1;
        std::uint32_t lo = bits_ & lo_mask;
        std::uint32_t hi = (bits_ & ~lo_mask & ~(std::uint32_t{1} << (v - 1))) >> 1;
        return FaceSet(lo | hi);
    }

    /// Inverse of drop_and_shift: reinsert a gap at position v (vertex v absent).
    FaceSet lift_at(int v) const {
        std::uint32_t lo_mask = (std::uint32_t{1} << (v - 1)) - 1;
        std::uint32_t lo = bits_ & lo_mask;
        std::uint32_t hi = (bits_ & ~lo_mask) << 1;
        return FaceSet(lo | hi);
    }

    auto operator<=>(const FaceSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

} // namespace zkmorse
