#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fppsim/config.hpp"
#include "fppsim/lattice.hpp"

namespace fppsim {

// Vertex of the honeycomb dual (a triangle center) in scaled integer
// coordinates: real position = (x/6, y*sqrt(3)/6).  Site centers sit at
// (6u+3v, 3v); dual vertices have y != 0 mod 3, so no probe point ever
// lies on a polyline and every containment test is exact.
struct DualVertex {
    std::int32_t x = 0;
    std::int32_t y = 0;
    friend bool operator==(const DualVertex&, const DualVertex&) = default;
    friend auto operator<=>(const DualVertex&, const DualVertex&) = default;
};

// One cluster-boundary loop.  Counterclockwise orientation means open sites
// lie on the inner boundary; area2 is the shoelace sum over scaled
// coordinates (positive iff counterclockwise).
struct InterfaceLoop {
    std::vector<DualVertex> vertices;  // cyclic, in traversal order
    bool ccw = false;
    std::int64_t area2 = 0;
    std::int32_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;  // scaled bbox
    bool touches_padding = false;  // some adjacent closed site is outside the region
    Site inside_probe{0, 0};       // a face on the loop's inner side
    std::vector<Site> adjacent_faces;  // both sides, deduplicated
};

struct LoopSet {
    std::vector<InterfaceLoop> loops;
    std::vector<std::int32_t> parent;  // smallest enclosing loop, -1 for roots

    std::int64_t interface_edge_count = 0;

    // Index of the smallest counterclockwise loop strictly enclosing loop i,
    // -1 when none exists.
    std::int32_t minimal_ccw_ancestor(std::int32_t i) const;
};

// Traces every open/closed interface edge of the configuration (sites
// outside the region count as closed padding) into oriented loops and
// builds the nesting forest.  Intended for windows that fit in memory with
// full polylines; the sweep statistics below stream instead.
LoopSet trace_loops(const Configuration& cfg);

// Winding-number containment of a site's center, exact in integers.
bool surrounds(const InterfaceLoop& loop, Site p);

// Number of loops separating 0 and (n,0).  Window must cover ball(0,3n).
std::int64_t separating_loop_count(const Configuration& cfg, int n);

// Number of loops enclosing 0 that lie strictly left of the line x = n.
std::int64_t halfplane_separating_count(const Configuration& cfg, int n);

// Both of the above from a single trace.
struct SeparatingCounts {
    std::int64_t point = 0;  // separating 0 and (n,0)
    std::int64_t line = 0;   // enclosing 0 within {x < n}
};
SeparatingCounts separating_counts(const Configuration& cfg, int n);

// Loops enclosing 0 whose polyline lies inside {m < |x| < n}.  Window must
// cover ball(0,n).
std::int64_t annulus_loop_count(const Configuration& cfg, int m, int n);

}  // namespace fppsim
