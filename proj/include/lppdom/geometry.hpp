#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace lppdom {

// Lattice site in Z^2. Coordinates may be negative in intermediate
// expressions (e.g. a+(x,-1)); windows only ever contain sites in Z_+^2.
struct Site {
    int x = 0;
    int y = 0;

    friend constexpr Site operator+(Site a, Site b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Site operator-(Site a, Site b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr bool operator==(Site a, Site b) { return a.x == b.x && a.y == b.y; }
    friend constexpr bool operator!=(Site a, Site b) { return !(a == b); }
    // Lexicographic; used for sorted offset sets.
    friend constexpr bool operator<(Site a, Site b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }

    // Anti-diagonal index x+y.
    constexpr int diag() const { return x + y; }
    constexpr bool in_quadrant() const { return x >= 0 && y >= 0; }
};

inline std::string to_string(Site z) {
    return "(" + std::to_string(z.x) + "," + std::to_string(z.y) + ")";
}

// Finite window {0..nx} x {0..ny}; always contains the origin.
struct SiteWindow {
    int nx = 0;
    int ny = 0;

    constexpr bool contains(Site z) const {
        return z.x >= 0 && z.y >= 0 && z.x <= nx && z.y <= ny;
    }
    constexpr int cols() const { return nx + 1; }
    constexpr int rows() const { return ny + 1; }
    constexpr std::size_t site_count() const {
        return static_cast<std::size_t>(cols()) * static_cast<std::size_t>(rows());
    }
    // Row-major, row = y.
    constexpr std::size_t index(Site z) const {
        assert(contains(z));
        return static_cast<std::size_t>(z.y) * static_cast<std::size_t>(cols()) +
               static_cast<std::size_t>(z.x);
    }
    constexpr Site site_at(std::size_t i) const {
        return Site{static_cast<int>(i % static_cast<std::size_t>(cols())),
                    static_cast<int>(i / static_cast<std::size_t>(cols()))};
    }
    constexpr int max_diag() const { return nx + ny; }

    friend constexpr bool operator==(SiteWindow a, SiteWindow b) {
        return a.nx == b.nx && a.ny == b.ny;
    }
    friend constexpr bool operator!=(SiteWindow a, SiteWindow b) { return !(a == b); }
};

inline std::string to_string(SiteWindow w) {
    return std::to_string(w.nx) + "x" + std::to_string(w.ny);
}

constexpr Site kOrigin{0, 0};
constexpr Site kStepRight{1, 0};
constexpr Site kStepUp{0, 1};

}  // namespace lppdom

template <>
struct std::hash<lppdom::Site> {
    std::size_t operator()(lppdom::Site z) const noexcept {
        std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(z.x)) << 32) |
                          static_cast<std::uint64_t>(static_cast<std::uint32_t>(z.y));
        k *= 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(k ^ (k >> 32));
    }
};
