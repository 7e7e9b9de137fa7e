#include "sprime/lattice.hpp"

#include "sprime/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace sprime {

Point Point::axis(std::size_t dim, std::size_t axis, Coord scale) {
    Point p = origin(dim);
    p[axis] = scale;
    return p;
}

std::string Point::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

Coord norm1(Coords n) {
    Coord s = 0;
    for (Coord c : n) s += c < 0 ? -c : c;
    return s;
}

bool canonical_less(Coords a, Coords b) {
    const Coord na = norm1(a);
    const Coord nb = norm1(b);
    if (na != nb) return na < nb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

void fill_shell(std::vector<Coord>& cur, std::size_t idx, Coord remaining, PointBlock& out) {
    const std::size_t d = cur.size();
    if (idx + 1 == d) {
        if (remaining == 0) {
            cur[idx] = 0;
            out.push_back(cur);
        } else {
            cur[idx] = -remaining;
            out.push_back(cur);
            cur[idx] = remaining;
            out.push_back(cur);
        }
        return;
    }
    for (Coord c = -remaining; c <= remaining; ++c) {
        cur[idx] = c;
        fill_shell(cur, idx + 1, remaining - (c < 0 ? -c : c), out);
    }
}

void append_shell(std::size_t dim, Coord r, PointBlock& out) {
    std::vector<Coord> cur(dim, 0);
    fill_shell(cur, 0, r, out);
}

}  // namespace

PointBlock enumerate_shell(std::size_t dim, Coord r) {
    if (dim == 0) throw InvalidArgument("dimension must be >= 1");
    PointBlock out(dim);
    if (r >= 0) append_shell(dim, r, out);
    return out;
}

PointBlock enumerate_window(const Window& w) {
    if (w.dim == 0) throw InvalidArgument("dimension must be >= 1");
    if (w.radius < 0) throw InvalidArgument("window radius must be >= 0");
    PointBlock out(w.dim);
    out.reserve(static_cast<std::size_t>(crosspolytope_count(w.dim, w.radius)));
    for (Coord r = 0; r <= w.radius; ++r) append_shell(w.dim, r, out);
    return out;
}

std::uint64_t crosspolytope_count(std::size_t dim, Coord radius) {
    // sum_{k=0}^{min(d,R)} 2^k C(d,k) C(R,k)
    std::uint64_t total = 0;
    std::uint64_t cd = 1;  // C(d,k)
    std::uint64_t cr = 1;  // C(R,k)
    std::uint64_t p2 = 1;
    const auto r = static_cast<std::uint64_t>(radius);
    for (std::uint64_t k = 0; k <= dim && k <= r; ++k) {
        total += p2 * cd * cr;
        cd = cd * (dim - k) / (k + 1);
        cr = cr * (r - k) / (k + 1);
        p2 *= 2;
    }
    return total;
}

}  // namespace sprime
