#pragma once

#include <cstdint>
#include <cmath>
#include <array>
#include <vector>
#include <string>
#include <functional>

namespace fppsim {

// Site of the triangular lattice in axial coordinates.
// Embedding: pos(u,v) = (u + v/2, v*sqrt(3)/2), unit nearest-neighbor spacing.
struct Site {
    std::int32_t u = 0;
    std::int32_t v = 0;

    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;
};

// The six neighbor offsets in counterclockwise order starting from (u+1,v).
inline constexpr std::array<Site, 6> kNeighborOffsets = {{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

inline Site neighbor(Site s, int dir) {
    const Site& d = kNeighborOffsets[dir];
    return {s.u + d.u, s.v + d.v};
}

inline std::array<Site, 6> neighbors(Site s) {
    std::array<Site, 6> out;
    for (int d = 0; d < 6; ++d) out[d] = neighbor(s, d);
    return out;
}

// 4*|pos(s)|^2 = (2u+v)^2 + 3v^2, exact in integers.
inline std::int64_t norm4sq(Site s) {
    const std::int64_t a = 2 * std::int64_t(s.u) + s.v;
    const std::int64_t b = s.v;
    return a * a + 3 * b * b;
}

inline std::int64_t dist4sq(Site s, Site t) {
    return norm4sq({s.u - t.u, s.v - t.v});
}

inline double pos_x(Site s) { return s.u + 0.5 * s.v; }
inline double pos_y(Site s) { return 0.8660254037844386 * s.v; }

struct SiteHash {
    std::size_t operator()(Site s) const {
        std::uint64_t k = (std::uint64_t(std::uint32_t(s.u)) << 32) | std::uint32_t(s.v);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return std::size_t(k);
    }
};

// Finite site region with O(1) membership and row-wise enumeration.
//
// Radii are kept as 4*r^2 so that membership reduces to comparing the
// integer norm4sq against the threshold; the comparison is exact whenever
// 4r^2 is integral (all radii used by the model are integers).
class Region {
public:
    enum class Kind { ball, annulus, sector, rect };

    static Region ball(Site center, double radius);
    static Region annulus(double inner, double outer);      // centered at origin
    static Region sector(double inner, double outer);       // |arg| < pi/10 wedge
    static Region rect(double x0, double x1, double y0, double y1);

    Kind kind() const { return kind_; }
    Site center() const { return center_; }
    double inner_radius() const { return std::sqrt(four_r2_in_ / 4.0); }
    double outer_radius() const { return std::sqrt(four_r2_out_ / 4.0); }

    bool contains(Site s) const;
    bool empty() const;

    // Row span of the bounding shape and per-row u-interval of the bounding
    // ball/box.  For annuli and sectors the interval still covers the hole;
    // contains() is the authoritative filter.
    std::int32_t row_min() const { return vmin_; }
    std::int32_t row_max() const { return vmax_; }
    void row_span(std::int32_t v, std::int32_t& ulo, std::int32_t& uhi) const;

    void for_each_site(const std::function<void(Site)>& fn) const;
    std::vector<Site> sites() const;
    std::int64_t count_sites() const;

    // True if every site of ball(c, r) belongs to this region.
    bool covers_ball(Site c, double r) const;
    // True if every site of annulus(m, n) belongs to this region.
    bool covers_annulus(double m, double n) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::ball;
    Site center_{0, 0};
    double four_r2_in_ = 0.0;   // 4*m^2 for annulus/sector, 0 for ball
    double four_r2_out_ = 0.0;  // 4*r^2 of the outer ball
    double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0;  // rect bounds
    std::int32_t vmin_ = 0, vmax_ = -1;

    void finish_rows();
};

// Sites of a ball region that have at least one of their six neighbors
// outside the region.
std::vector<Site> boundary_sites(const Region& reg);

// Dense indexer over a region's bounding rows: maps sites to consecutive
// array slots for distance fields and per-site scratch.
class RegionIndex {
public:
    RegionIndex() = default;
    explicit RegionIndex(const Region& reg);

    std::int64_t size() const { return total_; }
    std::int32_t row_min() const { return vmin_; }
    std::int32_t row_max() const { return vmax_; }

    // -1 when the site falls outside the indexed rows/columns.
    std::int64_t index_of(Site s) const {
        if (s.v < vmin_ || s.v > vmax_) return -1;
        const std::size_t r = std::size_t(s.v - vmin_);
        if (s.u < ulo_[r] || s.u > uhi_[r]) return -1;
        return offset_[r] + (s.u - ulo_[r]);
    }

    Site site_of(std::int64_t idx) const;

private:
    std::int32_t vmin_ = 0, vmax_ = -1;
    std::vector<std::int32_t> ulo_, uhi_;
    std::vector<std::int64_t> offset_;
    std::int64_t total_ = 0;
};

}  // namespace fppsim
