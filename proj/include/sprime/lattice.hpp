#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sprime {

using Coord = std::int64_t;
using Coords = std::span<const Coord>;

/// A point of Z^d. Ordering (`<=>`) is plain lexicographic on coordinates; use
/// `canonical_less` for the window order (1-norm first).
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<Coord> coords) : coords_(coords) {}
    explicit Point(Coords coords) : coords_(coords.begin(), coords.end()) {}

    static Point origin(std::size_t dim) { return Point(std::vector<Coord>(dim, 0)); }
    /// The unit vector e_i scaled by `scale`; `axis` is 0-based.
    static Point axis(std::size_t dim, std::size_t axis, Coord scale = 1);

    std::size_t dim() const noexcept { return coords_.size(); }
    Coord operator[](std::size_t i) const { return coords_[i]; }
    Coord& operator[](std::size_t i) { return coords_[i]; }
    Coords coords() const noexcept { return coords_; }
    operator Coords() const noexcept { return coords_; }

    friend auto operator<=>(const Point&, const Point&) = default;
    friend bool operator==(const Point&, const Point&) = default;

    /// "(3,-4)"
    std::string to_string() const;

private:
    std::vector<Coord> coords_;
};

/// |n_1| + ... + |n_d|
Coord norm1(Coords n);
inline Coord norm1(const Point& n) { return norm1(n.coords()); }

/// Norm first, then lexicographic.
bool canonical_less(Coords a, Coords b);
inline bool canonical_less(const Point& a, const Point& b) { return canonical_less(a.coords(), b.coords()); }

/// The finite ball {n in Z^d : |n|_1 <= radius}.
struct Window {
    std::size_t dim = 1;
    Coord radius = 0;
};

/// Points of a window in canonical order, stored contiguously (dim coordinates per point).
class PointBlock {
public:
    PointBlock() = default;
    explicit PointBlock(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    Coords operator[](std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
    Point point(std::size_t i) const { return Point((*this)[i]); }

    void push_back(Coords p) { data_.insert(data_.end(), p.begin(), p.end()); }
    void reserve(std::size_t points) { data_.reserve(points * dim_); }

private:
    std::size_t dim_ = 0;
    std::vector<Coord> data_;
};

/// Every point with |n|_1 <= R exactly once, ordered by norm then lexicographically.
PointBlock enumerate_window(const Window& w);

/// Points with |n|_1 == r, lexicographic.
PointBlock enumerate_shell(std::size_t dim, Coord r);

/// Lattice-point count of the d-dimensional crosspolytope of radius R:
/// sum_k 2^k C(d,k) C(R,k).
std::uint64_t crosspolytope_count(std::size_t dim, Coord radius);

}  // namespace sprime
